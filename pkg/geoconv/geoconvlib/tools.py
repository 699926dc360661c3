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

"""A set of general use helper functions"""

from typing import Callable, Hashable, Iterable, List, Optional, Sequence

def first(iterable: Iterable, where=None, default=None):
    """Returns the first item in the `iterable` that satisfies the `where`
    condition, or the `default` value if provided.

    Args:
        iterable (iterable):    An iterable
        where (lambda):         Condition to apply
        default: Default        value to return if no result is found

    Returns:
        First item, first item that matches condition, or default.
    """
    if iterable is None: return
    iterable = iter(iterable)
    return next((x for x in iterable if where(x))
                if where else iterable, default)

def last_index(seq: Sequence, where: Callable) -> Optional[int]:
    """Returns the index of the last item in `seq` that satisfies `where`,
    or None if nothing does.
    """
    for i in range(len(seq) - 1, -1, -1):
        if where(seq[i]):
            return i
    return None

def dedupe(iterable: Iterable, key: Callable[..., Hashable] = None) -> List:
    """Drops repeated items, keeping the first occurrence of each.

    Args:
        iterable (Iterable): Items to filter.
        key (lambda): Maps an item to the value compared for repeats.

    Returns:
        list: Items in their original order, without repeats.
    """
    seen = set()
    out = []
    for x in iterable:
        k = key(x) if key else x
        if k not in seen:
            seen.add(k)
            out.append(x)
    return out
