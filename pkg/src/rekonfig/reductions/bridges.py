"""Sequence conversions between the k-token-jumping and the token
addition/removal pictures.

A k-TJ step on independent sets expands into removals followed by
additions, never dipping below the intersection of the two endpoints; on
vertex covers additions go first, never exceeding the union. Conversely, a
single-change walk on independent sets that never drops more than one
below the endpoint size folds back into a 1-TJ walk by pairing each
removal with the following addition, after straightening any excursions
above the endpoint size.
"""

from __future__ import annotations

from ..errors import PreconditionError
from ..graph import FeasibilityKind, ReconfigSequence


def ktj_seq_to_tar_seq(
    seq: ReconfigSequence, kind: FeasibilityKind = FeasibilityKind.INDEPENDENT_SET
) -> ReconfigSequence:
    """Expand a k-TJ sequence into single add/remove steps.

    Independent sets: per step, remove the leaving vertices one by one
    (ascending id), then add the entering ones; every intermediate stays a
    subset of one endpoint, hence independent, and the minimum size over the
    expansion of one step is the intersection size of its endpoints. Vertex
    covers: additions first (supersets of covers are covers), maximum size
    is the union size.
    """
    steps = list(seq.steps)
    out = [steps[0]]
    for prev, cur in zip(steps, steps[1:]):
        if len(prev) != len(cur):
            raise PreconditionError("k-TJ steps must have equal sizes")
        leaving = sorted(prev - cur)
        entering = sorted(cur - prev)
        running = set(prev)
        if kind is FeasibilityKind.INDEPENDENT_SET:
            phases = (("remove", leaving), ("add", entering))
        else:
            phases = (("add", entering), ("remove", leaving))
        for action, vertices in phases:
            for v in vertices:
                if action == "remove":
                    running.discard(v)
                else:
                    running.add(v)
                out.append(frozenset(running))
    return ReconfigSequence(tuple(out))


def tar_highval_to_tj(seq: ReconfigSequence) -> ReconfigSequence:
    """Fold a high-value TAR walk on independent sets into a 1-TJ walk.

    Requires equal endpoint sizes s and minimum intermediate size >= s - 1.
    Excursions above s are straightened first: at a local maximum the
    addition of v followed by the removal of u rewrites to removing u before
    adding v (or drops out entirely when u = v), which never violates the
    size floor. The straightened walk alternates between sizes s and s - 1,
    and each valley is one token jump.
    """
    steps = [frozenset(s) for s in seq.steps]
    if len(steps[0]) != len(steps[-1]):
        raise PreconditionError("endpoint sizes differ")
    s = len(steps[0])
    dedup = [steps[0]]
    for x in steps[1:]:
        if x != dedup[-1]:
            dedup.append(x)
    steps = dedup
    for a, b in zip(steps, steps[1:]):
        if len(a ^ b) != 1:
            raise PreconditionError("consecutive TAR steps must differ in exactly one vertex")
    if any(len(x) < s - 1 for x in steps):
        raise PreconditionError(f"TAR walk drops below size {s - 1}")

    while True:
        peak = next(
            (
                i
                for i in range(1, len(steps) - 1)
                if len(steps[i]) > s
                and len(steps[i - 1]) < len(steps[i]) > len(steps[i + 1])
            ),
            None,
        )
        if peak is None:
            if all(len(x) <= s for x in steps):
                break
            raise AssertionError("walk above size s must have a strict local maximum")
        added = steps[peak] - steps[peak - 1]
        removed = steps[peak] - steps[peak + 1]
        if added == removed:
            del steps[peak]
            if steps[peak - 1] == steps[peak]:
                del steps[peak]
        else:
            steps[peak] = steps[peak - 1] - removed
        # rewriting preserves single-change adjacency and the size floor

    out = [steps[0]]
    i = 0
    while i < len(steps) - 1:
        # sizes alternate s, s-1, s, ... so steps[i+2] exists whenever a
        # valley starts at i
        assert len(steps[i]) == s
        nxt = steps[i + 2]
        if nxt != out[-1]:
            out.append(nxt)
        i += 2
    return ReconfigSequence(tuple(out))
