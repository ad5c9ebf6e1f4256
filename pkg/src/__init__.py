# SPDX-FileCopyrightText: 2025 spiderlab Contributors
# SPDX-License-Identifier: MIT
"""spiderlab - spider forest labeling package."""
