#!/usr/bin/env python

# Geoconv
# Copyright 2026 the Geoconv contributors

# This program is bound to the Hippocratic License 2.1
# Full text is available here:
# https: // firstdonoharm.dev/version/2/1/license

# Further to adherence to the Hippocratic License, this program is
# free software: you can redistribute it and / or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version. Full text is available here:
# http: // www.gnu.org/licenses

# Where a conflict or dispute would arise between these two licenses, HLv2.1
# shall take precedence.

"""Progress bar for bench runs.

    Progress: the main class exported by this module.
"""

from colors import color

import geoconvlib.config as config

class Progress:

    @staticmethod
    def bar(percentage: float, width: int = 50) -> str:
        """Renders a bar like '████▒░░░░░ 42.0%'.

        Args:
            percentage (float): Percent complete, 0 to 100.
            width (int): Total width including the percentage.

        Returns:
            str: The bar, colored unless plaintext is on.
        """
        from tinta import Tinta

        if config.plaintext:
            full, grad = '#', ['-', '-', '=']
        else:
            full = color('█', fg=Tinta.colors.pink)
            grad = [color(b, fg=Tinta.colors.dark_gray) for b in '░▒▓']

        if not 0. <= percentage <= 100.:
            raise ValueError(f'Percentage out of range: {percentage}')
        blocks = max(width - len(' 100%'), 10)
        per_block = 100.0 / blocks
        epsilon = 1e-6

        done = int((percentage + epsilon) / per_block)
        widget = [full] * done + [grad[0]] * (blocks - done)

        # Shade the first unfinished block by how far into it we are.
        remainder = percentage - done * per_block
        if remainder > epsilon and done < blocks:
            widget[done] = grad[int(len(grad) * remainder / per_block)]

        return f"{''.join(widget)} {f'{percentage:.1f}'.ljust(4)}%"
