"""Prefix/suffix projections of rank patterns and pattern fusion.

Two length-m patterns p and q fuse into length-(m+1) super-patterns when the
relative order of p's last m-1 ranks equals that of q's first m-1 ranks. The
boundary ranks decide the outcome: p[0] != q[-1] yields a single pattern, and
p[0] == q[-1] yields two (the combined window's first and last values may
order either way).

Candidates are organized into two groups by the order of the first two ranks:
group 1 starts rising ((1,2)-shaped), group 2 starts falling. On compressed
tie-free data, same-group fusions would have to begin with a strictly
monotone triple, which cannot occur, so only cross-group pairs are fused.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .model import Pattern, relative_order

GROUP_RISING = 1
GROUP_FALLING = 2


def group_of(pattern: Pattern) -> int:
    """1 when the pattern starts rising, 2 when it starts falling."""
    return GROUP_RISING if pattern[0] < pattern[1] else GROUP_FALLING


def prefix_order(pattern: Pattern) -> Pattern:
    """Relative order of the first m-1 ranks."""
    if len(pattern) < 3:
        raise ValueError("prefix order is defined for patterns of length >= 3")
    order = relative_order(pattern[:-1])
    assert order is not None  # ranks are distinct
    return order


def suffix_order(pattern: Pattern) -> Pattern:
    """Relative order of the last m-1 ranks."""
    if len(pattern) < 3:
        raise ValueError("suffix order is defined for patterns of length >= 3")
    order = relative_order(pattern[1:])
    assert order is not None
    return order


def fuse(p: Pattern, q: Pattern) -> tuple[Pattern, ...] | None:
    """Fuse prefix pattern ``p`` with suffix pattern ``q``.

    Returns None when the overlap orders disagree, a 1-tuple for the general
    case (p[0] != q[-1]) and a 2-tuple (u, v) for the special case, with u
    (rising endpoints) before v (falling endpoints).
    """
    m = len(p)
    if len(q) != m or m < 2:
        raise ValueError(f"fusion needs two patterns of equal length >= 2, got {len(p)} and {len(q)}")
    # At m == 2 the overlap is a single rank, so any pair is fusable.
    if m > 2 and relative_order(p[1:]) != relative_order(q[:-1]):
        return None
    a, b = p[0], q[-1]
    if a < b:
        cut = b + 1
        u = tuple(x if x < cut else x + 1 for x in p) + (cut,)
        return (u,)
    if a > b:
        head = a + 1
        u = (head,) + tuple(x if x < head else x + 1 for x in q)
        return (u,)
    mid = tuple(x if x < a else x + 1 for x in p[1:])
    return ((a,) + mid + (a + 1,), (a + 1,) + mid + (a,))


def group_fusion_pairs(
    group1: Iterable, group2: Iterable
) -> Iterator[tuple[object, object, int]]:
    """Cross-group fusion pairs ``(prefix, suffix, target group)``.

    Yields every group1 x group2 pair targeted to group 1, then every
    group2 x group1 pair targeted to group 2; never a same-group pair.
    """
    group1 = list(group1)
    group2 = list(group2)
    for p in group1:
        for q in group2:
            yield p, q, GROUP_RISING
    for p in group2:
        for q in group1:
            yield p, q, GROUP_FALLING


def all_fusion_pairs(candidates: Iterable) -> Iterator[tuple[object, object]]:
    """Every ordered pair of candidates, including same-group and self pairs.

    This is the plain fusion strategy used as an ablation baseline and as
    the fallback when mining uncompressed data, where same-group fusions can
    still have occurrences.
    """
    candidates = list(candidates)
    for p in candidates:
        for q in candidates:
            yield p, q
