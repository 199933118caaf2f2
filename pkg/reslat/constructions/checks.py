"""Self-validation of constructed algebras."""

# SPDX-FileCopyrightText: 2026 reslat contributors
# SPDX-License-Identifier: Apache-2.0

import logging
from typing import Callable, Optional

from reslat.base import CheckReport, Embedding, FinAlgebra
from reslat.core.homomorphism import check_homomorphism
from reslat.core.validation import validate
from reslat.exceptions import InvariantBreach

logger = logging.getLogger(__name__)


def self_check(
    operation: str,
    algebra: FinAlgebra,
    extra: Optional[Callable[[FinAlgebra], bool]] = None,
) -> FinAlgebra:
    """Validate a constructed algebra and raise InvariantBreach when it fails."""
    report = validate(algebra)
    if extra is not None and report.ok and not extra(algebra):
        report.add(f"{operation} class membership")
    if not report.ok:
        logger.error("%s produced an invalid algebra: %s", operation, report.violations[0])
        raise InvariantBreach(operation, report)
    return algebra


def check_embeddings(operation: str, *embeddings: Embedding):
    """Raise InvariantBreach when a constructed embedding is not a homomorphism."""
    report = CheckReport()
    for embedding in embeddings:
        report.extend(check_homomorphism(embedding))
    if not report.ok:
        raise InvariantBreach(operation, report)
