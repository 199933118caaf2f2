# SPDX-FileCopyrightText: 2026 reslat contributors
#
# SPDX-License-Identifier: Apache-2.0
"""Python tests for reslat."""
