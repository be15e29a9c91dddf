"""One-step rewriting rules E1, E2 and SE, and the closures they generate.

Every rule is applied in both directions, so each neighbour relation is
symmetric and a closure is an equivalence class.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Callable, Iterator
from dataclasses import dataclass

from .errors import ClosureBudgetExceeded
from .words import OrderedAlphabet, Word, check_letters

DEFAULT_CLOSURE_BUDGET = 10**7


@dataclass(frozen=True)
class RewriteStep:
    rule: str
    positions: tuple[tuple[int, int], ...]
    before: Word
    after: Word

    def __str__(self):
        pos = "/".join(f"({i},{j})" for i, j in self.positions)
        return f"{self.rule} @ {pos}: {self.before} -> {self.after}"

    def replay(self) -> Word:
        """Re-apply the recorded swaps to ``before``."""
        letters = list(self.before)
        for i, j in self.positions:
            letters[i], letters[j] = letters[j], letters[i]
        return "".join(letters)


@dataclass
class ClosureResult:
    seed: Word
    class_members: set
    steps_explored: int


def _swap_pairs(w: Word, i: int, j: int) -> Word:
    # swap w[i], w[i+1] and w[j], w[j+1]
    return w[:i] + w[i + 1] + w[i] + w[i + 2 : j] + w[j + 1] + w[j] + w[j + 2 :]


def _paired_swaps(w: Word, rule: str, allowed_for: Callable[[str, str], set | None]) -> Iterator[RewriteStep]:
    """Yield every ``x ab y ba z -> x ba y ab z`` with ``y`` over ``allowed_for(a, b)``."""
    n = len(w)
    for i in range(n - 3):
        a, b = w[i], w[i + 1]
        if a == b:
            continue
        allowed = allowed_for(a, b)
        if allowed is None:
            continue
        for j in range(i + 2, n - 1):
            if w[j] == b and w[j + 1] == a:
                yield RewriteStep(rule, ((i, i + 1), (j, j + 1)), w, _swap_pairs(w, i, j))
            if w[j] not in allowed:
                break


def e1_steps(w: Word, order: OrderedAlphabet) -> Iterator[RewriteStep]:
    check_letters(w, order)
    rank = {a: q for q, a in enumerate(order)}
    for i in range(len(w) - 1):
        if abs(rank[w[i]] - rank[w[i + 1]]) >= 2:
            yield RewriteStep("E1", ((i, i + 1),), w, w[:i] + w[i + 1] + w[i] + w[i + 2 :])


def e2_steps(w: Word, order: OrderedAlphabet) -> Iterator[RewriteStep]:
    check_letters(w, order)
    rank = {a: q for q, a in enumerate(order)}
    s = len(order)

    def allowed_for(a, b):
        k = min(rank[a], rank[b])
        if abs(rank[a] - rank[b]) != 1:
            return None
        # letters just outside the pair in the ordering are forbidden in y;
        # at the ends of the ordering there is nothing to exclude
        banned = {order[q] for q in (k - 1, k + 2) if 0 <= q < s}
        return set(order) - banned

    yield from _paired_swaps(w, "E2", allowed_for)


def se_steps(w: Word) -> Iterator[RewriteStep]:
    yield from _paired_swaps(w, "SE", lambda a, b: {a, b})


def e1_neighbors(w: Word, order: OrderedAlphabet) -> set:
    return {st.after for st in e1_steps(w, order)}


def e2_neighbors(w: Word, order: OrderedAlphabet) -> set:
    return {st.after for st in e2_steps(w, order)}


def se_neighbors(w: Word) -> set:
    return {st.after for st in se_steps(w)}


def me_steps(w: Word, order: OrderedAlphabet) -> Iterator[RewriteStep]:
    yield from e1_steps(w, order)
    yield from e2_steps(w, order)


def me_neighbors(w: Word, order: OrderedAlphabet) -> set:
    return {st.after for st in me_steps(w, order)}


def one_equiv_normal_form(w: Word, order: OrderedAlphabet) -> Word:
    """Lexicographically least word (w.r.t. ``order``) reachable by E1 alone.

    Letters commute exactly when their ranks differ by at least two, so the
    E1 class is a trace. Its least representative is built greedily: at each
    step take the smallest letter whose first occurrence commutes with every
    letter before it.
    """
    check_letters(w, order)
    rank = {a: q for q, a in enumerate(order)}
    rest = list(w)
    out = []
    while rest:
        best = None
        for p, ch in enumerate(rest):
            if all(abs(rank[ch] - rank[x]) >= 2 for x in rest[:p]):
                if best is None or rank[ch] < rank[rest[best]]:
                    best = p
        out.append(rest.pop(best))
    return "".join(out)


def closure(seed: Word, neighbors: Callable[[Word], set], budget: int = DEFAULT_CLOSURE_BUDGET) -> ClosureResult:
    """Breadth-first closure of ``seed`` under a symmetric neighbour map."""
    members = {seed}
    queue = deque([seed])
    explored = 0
    while queue:
        u = queue.popleft()
        explored += 1
        for v in neighbors(u):
            if v not in members:
                members.add(v)
                if len(members) > budget:
                    raise ClosureBudgetExceeded(
                        f"closure of {seed!r} exceeded {budget} members"
                    )
                queue.append(v)
    return ClosureResult(seed, members, explored)


def rewrite_path(
    w: Word,
    target: Word,
    steps: Callable[[Word], Iterator[RewriteStep]],
    budget: int = DEFAULT_CLOSURE_BUDGET,
) -> list[RewriteStep] | None:
    """Shortest sequence of rule applications turning ``w`` into ``target``."""
    if w == target:
        return []
    parent: dict[Word, RewriteStep | None] = {w: None}
    queue = deque([w])
    while queue:
        u = queue.popleft()
        for st in steps(u):
            v = st.after
            if v in parent:
                continue
            parent[v] = st
            if v == target:
                path = []
                while parent[v] is not None:
                    path.append(parent[v])
                    v = parent[v].before
                return path[::-1]
            if len(parent) > budget:
                raise ClosureBudgetExceeded(f"closure of {w!r} exceeded {budget} members")
            queue.append(v)
    return None


def _quick_reject(w: Word, w2: Word) -> bool:
    return len(w) != len(w2) or sorted(w) != sorted(w2)


def me_equivalent(w: Word, w2: Word, order: OrderedAlphabet, budget: int = DEFAULT_CLOSURE_BUDGET) -> bool:
    check_letters(w, order)
    check_letters(w2, order)
    if _quick_reject(w, w2):
        return False
    return rewrite_path(w, w2, lambda u: me_steps(u, order), budget) is not None


def mse_equivalent(w: Word, w2: Word, budget: int = DEFAULT_CLOSURE_BUDGET) -> bool:
    if _quick_reject(w, w2):
        return False
    return rewrite_path(w, w2, se_steps, budget) is not None


def one_equivalent(w: Word, w2: Word, order: OrderedAlphabet) -> bool:
    return one_equiv_normal_form(w, order) == one_equiv_normal_form(w2, order)
