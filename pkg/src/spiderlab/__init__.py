# SPDX-FileCopyrightText: 2025 spiderlab Contributors
# SPDX-License-Identifier: MIT
"""
spiderlab - k-shifted antimagic labelings of spider forests.
"""

__version__ = "0.1.0"
