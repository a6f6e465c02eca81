"""Perfect matchings between slots and multiset elements.

Both coherence directions reduce to the same question: given ``k`` slots,
each carrying a set of admissible notes, and a multiset of ``k`` notes,
can every slot take a distinct element of the multiset?  The search is
the classical augmenting-path method; instances have at most a dozen
slots, so nothing cleverer is needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence


@dataclass(frozen=True)
class MatchResult:
    """Outcome of :func:`match_slots`.

    On success ``assignment[i]`` is the note given to slot ``i``.  On failure
    ``reason`` is ``"cardinality"`` or ``"hall"`` and ``hall_slots`` is a set
    of slots whose admissible notes, counted with multiplicity in the target
    multiset, number fewer than the slots themselves.
    """

    ok: bool
    assignment: tuple = ()
    reason: Optional[str] = None
    hall_slots: tuple = ()
    hall_notes: tuple = ()


def match_slots(admissible: Sequence[frozenset], notes: Sequence[int]) -> MatchResult:
    """Assign each slot a distinct copy of a note it admits.

    Copies of the target multiset are tried in ascending pitch order and
    slots are processed in index order, so the witness is reproducible.
    """
    copies = sorted(int(n) for n in notes)
    k = len(admissible)
    if len(copies) != k:
        hall = _cardinality_evidence(admissible, copies)
        return MatchResult(False, reason="cardinality", hall_slots=hall[0], hall_notes=hall[1])

    adj = [[j for j, n in enumerate(copies) if n in admissible[i]] for i in range(k)]
    owner = [-1] * k  # copy index -> slot

    def augment(i, seen):
        for j in adj[i]:
            if seen[j]:
                continue
            seen[j] = True
            if owner[j] == -1 or augment(owner[j], seen):
                owner[j] = i
                return True
        return False

    for i in range(k):
        if not augment(i, [False] * k):
            slots, reach = _alternating_closure(i, adj, owner)
            return MatchResult(
                False,
                reason="hall",
                hall_slots=tuple(sorted(slots)),
                hall_notes=tuple(sorted(copies[j] for j in reach)),
            )
    assignment = [None] * k
    for j, i in enumerate(owner):
        assignment[i] = copies[j]
    return MatchResult(True, assignment=tuple(assignment))


def _alternating_closure(start, adj, owner):
    """Slots and copies reachable from an unmatched slot by alternating paths.

    Every reachable copy is matched (otherwise an augmenting path would
    exist), and to slots inside the closure, so the closure has one more
    slot than it has neighbouring copies: a Hall violation.
    """
    slots = {start}
    reach = set()
    stack = [start]
    while stack:
        i = stack.pop()
        for j in adj[i]:
            if j in reach:
                continue
            reach.add(j)
            o = owner[j]
            if o != -1 and o not in slots:
                slots.add(o)
                stack.append(o)
    return slots, reach


def _cardinality_evidence(admissible, copies):
    # With more slots than notes the full slot set is already a Hall violation.
    if len(admissible) > len(copies):
        nbr = [n for n in copies if any(n in a for a in admissible)]
        return tuple(range(len(admissible))), tuple(nbr)
    return (), ()
