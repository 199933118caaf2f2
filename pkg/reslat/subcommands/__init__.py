"""Define CLI subcommand arguments and their actions."""

# SPDX-FileCopyrightText: 2026 reslat contributors
# SPDX-License-Identifier: Apache-2.0

from reslat.subcommands import (
    amalgamate,
    bruteforce,
    check,
    construct,
    count,
    decompose,
    enumerate_class,
    export,
    fep,
    props,
)

__all__ = [
    "amalgamate",
    "bruteforce",
    "check",
    "construct",
    "count",
    "decompose",
    "enumerate_class",
    "export",
    "fep",
    "props",
]
