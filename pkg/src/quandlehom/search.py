"""Bounded search for shortest cycles pairing nontrivially with a cocycle.

Two windows are covered, mirroring the case split used to bound cycle
lengths from below:

* single degree: every cycle supported at one degree splits its terms, per
  index, into minimal families with vanishing f-image.  Families of sizes 2
  to 5 come from the symbolic census and are joined across indices by
  hashing g-images; a cycle consisting of one larger family (sizes 6 up; a
  smaller cofactor is impossible below length 9) is found by a guided
  depth-first search at a fixed index with joint f/g residuals.

* two adjacent degrees: the bottom layer is a single minimal family of size
  2 (profile B) or 3 (profile C); the top layer solves f(T1) = -g(T0) by a
  residual-guided search plus an optional appended null family, and must
  itself have vanishing g-image.

Every candidate is re-verified through the boundary map before being
reported.  Searches are deterministic; exhaustion reports record exactly
what was covered.  A probe budget aborts oversized runs with a refusal
report rather than truncating silently.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .chains import Chain, boundary, chain_to_text, f_map, g_map, length
from .cocycles import ThreeCocycle, evaluate
from .quandles import FiniteQuandle
from .structure import concrete_families


class SearchError(ValueError):
    pass


class BudgetExceeded(SearchError):
    def __init__(self, message, probes=0):
        super().__init__(message)
        self.probes = probes

    def __reduce__(self):
        return (BudgetExceeded, (self.args[0], self.probes))


MAX_SEARCH_LENGTH = 8
JOIN_PART_MAX = 5


@dataclass
class SearchConfig:
    quandle: FiniteQuandle
    cocycle: ThreeCocycle
    max_length: int = 7
    window: str = "single"  # single | double
    profile: str = "A"  # A | B | C | BC
    threads: int = 1
    budget: int = 10**9
    collect_all: bool = False  # keep zero-pairing cycles too (testing aid)

    def validate(self):
        if not 2 <= self.max_length <= MAX_SEARCH_LENGTH:
            raise SearchError("max_length must be between 2 and %d" % MAX_SEARCH_LENGTH)
        if self.window not in ("single", "double"):
            raise SearchError("window must be 'single' or 'double'")
        if self.window == "single" and self.profile != "A":
            raise SearchError("the single-degree window is profile A")
        if self.window == "double" and self.profile not in ("B", "C", "BC"):
            raise SearchError("two-degree windows use profile B, C or BC")
        if self.threads < 1:
            raise SearchError("threads must be positive")
        if self.budget < 1:
            raise SearchError("budget must be positive")


@dataclass
class FoundCycle:
    chain: Chain
    value: int
    shape: str

    def key(self):
        return self.chain.key()


@dataclass
class SearchReport:
    quandle_name: str
    cocycle_name: str
    modulus: int
    window: str
    profile: str
    max_length: int
    covered: list = field(default_factory=list)
    component_counts: dict = field(default_factory=dict)
    probes: int = 0
    zero_value_cycles: int = 0
    found: list = field(default_factory=list)
    refused: str | None = None

    @property
    def exhausted(self):
        return self.refused is None and not self.found

    def certificate_text(self):
        lines = [
            "search quandle=%s cocycle=%s mod=%d window=%s profile=%s max_length=%d"
            % (
                self.quandle_name,
                self.cocycle_name,
                self.modulus,
                self.window,
                self.profile,
                self.max_length,
            )
        ]
        for note in self.covered:
            lines.append("covered " + note)
        for size, count in sorted(self.component_counts.items()):
            lines.append("components size=%s count=%d" % (size, count))
        lines.append("probes %d" % self.probes)
        lines.append("cycles with zero pairing seen: %d" % self.zero_value_cycles)
        if self.refused:
            lines.append("REFUSED: %s" % self.refused)
        elif self.found:
            lines.append("FOUND %d cycles with nonzero pairing:" % len(self.found))
            for fc in self.found:
                lines.append(
                    "cycle value=%d length=%d shape=%s" % (fc.value, length(fc.chain), fc.shape)
                )
                lines.append(chain_to_text(fc.chain).rstrip("\n"))
        else:
            lines.append(
                "EXHAUSTED: no cycle with nonzero pairing in the covered window"
            )
        return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# shared helpers


def _chain_of(parts):
    return Chain.from_signed_terms(parts, arity=3, graded=True)


def _g_key(chain):
    return tuple(chain.items_sorted())


def _sign_normal_chain(chain):
    items = tuple(chain.items_sorted())
    neg = tuple((t, -c) for t, c in items)
    return items if items <= neg else neg


def _partitions_into_parts(total, largest, smallest=2):
    """Multiset partitions of `total` into parts between smallest and largest,
    emitted in non-increasing order."""
    out = []

    def rec(rest, cap, acc):
        if rest == 0:
            out.append(tuple(acc))
            return
        for part in range(min(cap, rest), smallest - 1, -1):
            remainder = rest - part
            if remainder == 0 or remainder >= smallest:
                acc.append(part)
                rec(remainder, part, acc)
                acc.pop()

    rec(total, largest, [])
    return out


def _merge_terms(counter, parts, undo):
    """Accumulate (sign, term) pairs; return False on any cancellation."""
    for sign, term in parts:
        new = counter.get(term, 0) + sign
        undo.append((term, counter.get(term, 0)))
        if new == 0:
            del counter[term]
            return False
        counter[term] = new
    return True


def _unmerge(counter, undo):
    while undo:
        term, old = undo.pop()
        if old == 0:
            counter.pop(term, None)
        else:
            counter[term] = old


# ---------------------------------------------------------------------------
# single-degree window


def _all_components(q, size):
    """Minimal f-null families of one size, across all indices, keyed with
    their g-image."""
    comps = []
    for u in range(q.size):
        for fam in concrete_families(q, size, index=u, degree=0):
            comps.append((fam, _g_key(g_map(_chain_of(fam), q))))
    comps.sort()
    return comps


def _join_partition(q, partition, comps_by_size, budget_state, on_cycle):
    """Enumerate unions of minimal families over one size partition with
    vanishing total g-image.

    Parts are chosen in ascending size order with the largest part resolved
    through a hash of its g-images; equal-size parts are kept non-decreasing
    to list each multiset of families once.
    """
    parts = sorted(partition)  # ascending; hash the largest size
    hash_size = parts[-1]
    prefix_sizes = parts[:-1]
    table = {}
    for fam, gkey in comps_by_size[hash_size]:
        table.setdefault(gkey, []).append(fam)

    # For single-part partitions scan the g-null families directly.
    if not prefix_sizes:
        for fam, gkey in comps_by_size[hash_size]:
            budget_state[0] += 1
            if not gkey:
                counter2 = {}
                if _merge_terms(counter2, fam, []):
                    on_cycle(dict(counter2))
        return

    counter = {}

    def neg_key(acc_g):
        return tuple(sorted((t, -c) for t, c in acc_g.items()))

    def rec(level, last_fam, acc_g):
        budget_state[0] += 1
        if budget_state[0] > budget_state[1]:
            raise BudgetExceeded(
                "single-degree join exceeded the probe budget", budget_state[0]
            )
        if level == len(prefix_sizes):
            same_size = prefix_sizes[-1] == hash_size
            for fam in table.get(neg_key(acc_g), ()):
                if same_size and fam < last_fam:
                    continue
                budget_state[0] += 1
                undo = []
                if _merge_terms(counter, fam, undo):
                    on_cycle(dict(counter))
                _unmerge(counter, undo)
            return
        size = prefix_sizes[level]
        lower = last_fam if (level and prefix_sizes[level - 1] == size) else None
        for fam, gkey in comps_by_size[size]:
            if lower is not None and fam < lower:
                continue
            undo = []
            if _merge_terms(counter, fam, undo):
                for t, c in gkey:
                    acc_g[t] = acc_g.get(t, 0) + c
                    if acc_g[t] == 0:
                        del acc_g[t]
                rec(level + 1, fam, acc_g)
                for t, c in gkey:
                    acc_g[t] = acc_g.get(t, 0) - c
                    if acc_g[t] == 0:
                        del acc_g[t]
            _unmerge(counter, undo)

    rec(0, (), {})


def _fg_component_dfs(q, size, index, budget_state):
    """Minimal f-null families at one index that are also g-null: the single
    components that alone form a one-degree cycle.  Guided by the joint
    residuals; the family anchor is its least color word, taken positive."""
    n = q.size
    terms = []
    for a in range(n):
        for b in range(n):
            if b == a:
                continue
            for c in range(n):
                if c == b:
                    continue
                terms.append((0, index, (a, b, c)))
    f_cancel = {}
    g_cancel = {}
    f_img = {}
    g_img = {}
    for t in terms:
        fc = f_map(Chain(3, True, {t: 1}))
        gc = g_map(Chain(3, True, {t: 1}), q)
        f_img[t] = tuple(fc.terms.items())
        g_img[t] = tuple(gc.terms.items())
        for key, s in f_img[t]:
            f_cancel.setdefault(key, []).append((t, s))
        for key, s in g_img[t]:
            g_cancel.setdefault(key, []).append((t, s))

    results = set()

    def emit(family):
        fam = tuple(sorted(family))
        chain = _chain_of(fam)
        if length(chain) != size:
            return
        # subset-minimality of the f-image
        idx = list(range(size))
        for r in range(1, size):
            for combo in itertools.combinations(idx, r):
                if not f_map(_chain_of([fam[i] for i in combo])):
                    return
        results.add(fam)

    def extend(family, fres, gres, anchor_colors):
        budget_state[0] += 1
        if budget_state[0] > budget_state[1]:
            raise BudgetExceeded("component search exceeded the probe budget", budget_state[0])
        depth = len(family)
        if depth == size:
            if not fres and not gres:
                emit(family)
            return
        if not fres:
            return  # an f-null proper prefix cannot sit inside one family
        rem = size - depth
        if sum(map(abs, fres.values())) > 3 * rem or sum(map(abs, gres.values())) > 3 * rem:
            return
        if gres:
            key = min(gres)
            need = 1 if gres[key] > 0 else -1
            pool = g_cancel.get(key, ())
        else:
            key = min(fres)
            need = 1 if fres[key] > 0 else -1
            pool = f_cancel.get(key, ())
        for t, s in pool:
            colors = t[2]
            if colors < anchor_colors:
                continue
            sign = -need * s
            if colors == anchor_colors and sign == -1:
                continue
            if (-sign, t) in family:
                continue
            nf = dict(fres)
            for k2, s2 in f_img[t]:
                v = nf.get(k2, 0) + sign * s2
                if v:
                    nf[k2] = v
                else:
                    nf.pop(k2, None)
            ng = dict(gres)
            for k2, s2 in g_img[t]:
                v = ng.get(k2, 0) + sign * s2
                if v:
                    ng[k2] = v
                else:
                    ng.pop(k2, None)
            extend(family + [(sign, t)], nf, ng, anchor_colors)

    for t in terms:
        fres = {k: s for k, s in f_img[t]}
        gres = {k: s for k, s in g_img[t]}
        extend([(1, t)], fres, gres, t[2])
    return sorted(results)


def _search_single_degree(cfg, report):
    q = cfg.quandle
    theta = cfg.cocycle
    budget_state = [0, cfg.budget]
    comps_by_size = {}
    for size in range(2, min(JOIN_PART_MAX, cfg.max_length) + 1):
        comps_by_size[size] = _all_components(q, size)
        report.component_counts[size] = len(comps_by_size[size])

    seen = set()
    found = {}

    def on_cycle(counter, shape):
        chain = Chain(3, True)
        chain.terms = dict(counter)
        key = _sign_normal_chain(chain)
        if key in seen:
            return
        seen.add(key)
        if boundary(chain, q):
            raise AssertionError("join produced a non-cycle")
        value = evaluate(theta, chain)
        if value != 0:
            found[key] = FoundCycle(chain, value, shape)
        else:
            report.zero_value_cycles += 1
            if cfg.collect_all:
                found[key] = FoundCycle(chain, value, shape)

    partitions = []
    for l in range(2, cfg.max_length + 1):
        partitions.extend(
            (l, p) for p in _partitions_into_parts(l, min(JOIN_PART_MAX, l))
        )
    for l, partition in sorted(partitions):
        shape = "degree0 parts %s" % (list(partition),)
        _join_partition(
            q,
            partition,
            comps_by_size,
            budget_state,
            lambda counter, shape=shape: on_cycle(counter, shape),
        )
        report.covered.append("length %d as %s" % (l, list(partition)))

    # one large family alone (sizes 6..max_length); a large family plus any
    # other part needs length >= 6 + 2 > 7, so below length 8 this closes
    # the census.  At length 8 the uncovered split is 6+2; say so.
    for size in range(JOIN_PART_MAX + 1, cfg.max_length + 1):
        count = 0
        for u in range(q.size):
            for fam in _fg_component_dfs(q, size, u, budget_state):
                count += 1
                on_cycle(dict((t, s) for s, t in fam), "degree0 single family of %d" % size)
        report.covered.append("length %d as one family (index scan, %d hits)" % (size, count))
    if cfg.max_length >= JOIN_PART_MAX + 3:
        report.covered.append(
            "length %d split 6+2 NOT covered (outside the certified window)"
            % cfg.max_length
        )

    report.probes = budget_state[0]
    report.found = sorted(found.values(), key=lambda fc: fc.key())


# ---------------------------------------------------------------------------
# two-degree window (profiles B and C)


def _degree1_universe(q):
    terms = []
    for u in range(q.size):
        for a in range(q.size):
            for b in range(q.size):
                if b == a:
                    continue
                for c in range(q.size):
                    if c == b:
                        continue
                    terms.append((1, u, (a, b, c)))
    f_cancel = {}
    f_img = {}
    g_img = {}
    for t in terms:
        fc = f_map(Chain(3, True, {t: 1}))
        f_img[t] = tuple(fc.terms.items())
        g_img[t] = tuple(g_map(Chain(3, True, {t: 1}), q).terms.items())
        for key, s in f_img[t]:
            f_cancel.setdefault(key, []).append((t, s))
    return f_cancel, f_img, g_img


def _null_suffixes(q, size):
    """Minimal f-null families of one size at degree 1, all indices."""
    out = []
    for u in range(q.size):
        out.extend(concrete_families(q, size, index=u, degree=1))
    return out


def _solve_top_layer(q, target, m, universe, suffixes, budget_state, emit):
    """All efficient m-term degree-1 multisets T with f(T) = target, found as
    a residual-guided cover plus an optional appended f-null family."""
    f_cancel, f_img, g_img = universe

    def finish(family):
        chain = _chain_of(family)
        if length(chain) != m:
            return
        emit(tuple(sorted(family)))

    def extend(family, residual):
        # invariant: residual = target - f(sum of family)
        budget_state[0] += 1
        if budget_state[0] > budget_state[1]:
            raise BudgetExceeded("two-degree window exceeded the probe budget", budget_state[0])
        used = len(family)
        if not residual:
            rest = m - used
            if rest == 0:
                finish(family)
            elif 2 <= rest <= 3:
                for fam in suffixes[rest]:
                    cand = family + list(fam)
                    finish(cand)
            return
        if used == m:
            return
        if sum(map(abs, residual.values())) > 3 * (m - used):
            return
        key = min(residual)
        need = 1 if residual[key] > 0 else -1
        for t, s in f_cancel.get(key, ()):
            sign = need * s  # the term then contributes `need` at `key`
            if (-sign, t) in family:
                continue
            nr = dict(residual)
            for k2, s2 in f_img[t]:
                v = nr.get(k2, 0) - sign * s2
                if v:
                    nr[k2] = v
                else:
                    nr.pop(k2, None)
            extend(family + [(sign, t)], nr)

    extend([], dict(target.terms))


def _double_window_bases(q, base_sizes):
    out = []
    for base_size in base_sizes:
        for u in range(q.size):
            for fam in concrete_families(q, base_size, index=u, degree=0):
                out.append((base_size, fam))
    out.sort()
    return out


def _process_bases(q, theta, bases, max_length, budget, collect_all):
    """Serial core of the two-degree window over a list of bottom layers."""
    universe = _degree1_universe(q)
    suffixes = {r: _null_suffixes(q, r) for r in (2, 3)}
    budget_state = [0, budget]
    seen = set()
    found = {}
    zero_keys = set()
    skipped = 0
    for base_size, base in bases:
        base_chain = _chain_of(base)
        gimage = g_map(base_chain, q)
        if not gimage:
            skipped += 1
            continue
        target = -gimage
        for l in range(max(6, base_size + 2), max_length + 1):
            m = l - base_size

            def emit(top, base_chain=base_chain, l=l, base_size=base_size):
                top_chain = _chain_of(top)
                if g_map(top_chain, q):
                    return
                total = base_chain + top_chain
                if length(total) != l:
                    return
                key = _sign_normal_chain(total)
                if key in seen:
                    return
                seen.add(key)
                if boundary(total, q):
                    raise AssertionError("window join produced a non-cycle")
                value = evaluate(theta, total)
                shape = "degrees 0+1 split %d+%d" % (base_size, l - base_size)
                if value != 0:
                    found[key] = FoundCycle(total, value, shape)
                else:
                    zero_keys.add(key)
                    if collect_all:
                        found[key] = FoundCycle(total, value, shape)

            _solve_top_layer(q, target, m, universe, suffixes, budget_state, emit)
    return found, zero_keys, skipped, budget_state[0]


def _double_worker(args):
    table, theta_modulus, theta_values, bases, max_length, budget, collect_all = args
    q = FiniteQuandle(table)
    theta = ThreeCocycle(q, theta_modulus, dict(theta_values))
    found, zero_keys, skipped, probes = _process_bases(
        q, theta, bases, max_length, budget, collect_all
    )
    return (
        [(key, tuple(fc.chain.items_sorted()), fc.value, fc.shape) for key, fc in found.items()],
        zero_keys,
        skipped,
        probes,
    )


def _search_double_window(cfg, report):
    q = cfg.quandle
    theta = cfg.cocycle
    base_sizes = {"B": (2,), "C": (3,), "BC": (2, 3)}[cfg.profile]
    bases = _double_window_bases(q, base_sizes)
    for base_size in base_sizes:
        report.component_counts["degree0-base-%d" % base_size] = sum(
            1 for s, _ in bases if s == base_size
        )

    if cfg.threads == 1:
        found, zero_keys, skipped, probes = _process_bases(
            q, theta, bases, cfg.max_length, cfg.budget, cfg.collect_all
        )
        merged = {k: fc for k, fc in found.items()}
    else:
        import multiprocessing

        chunks = [bases[i :: cfg.threads] for i in range(cfg.threads)]
        args = [
            (
                q.table,
                theta.modulus,
                tuple(theta.values.items()),
                chunk,
                cfg.max_length,
                cfg.budget // cfg.threads,
                cfg.collect_all,
            )
            for chunk in chunks
            if chunk
        ]
        with multiprocessing.Pool(len(args)) as pool:
            parts = pool.map(_double_worker, args)
        merged = {}
        zero_keys = set()
        skipped = 0
        probes = 0
        for items, zk, sk, pr in parts:
            zero_keys |= zk
            skipped += sk
            probes += pr
            for key, chain_items, value, shape in items:
                if key not in merged:
                    chain = Chain(3, True, dict(chain_items))
                    merged[key] = FoundCycle(chain, value, shape)

    for base_size in base_sizes:
        report.covered.append(
            "bottom layer size %d at degree 0 (all indices, both signs), top layer"
            " sizes %s at degree 1, top g-image zero enforced"
            % (
                base_size,
                [l - base_size for l in range(max(6, base_size + 2), cfg.max_length + 1)],
            )
        )
    report.covered.append(
        "bases with vanishing g-image handed to the single-degree window: %d" % skipped
    )
    report.zero_value_cycles = len(zero_keys)
    report.probes = probes
    report.found = sorted(merged.values(), key=lambda fc: fc.key())


def search_min_cycles(cfg):
    """Run the configured search; returns a SearchReport.  On budget
    overrun the report carries a refusal note instead of results."""
    cfg.validate()
    report = SearchReport(
        quandle_name=cfg.quandle.name or "?",
        cocycle_name=cfg.cocycle.name or "?",
        modulus=cfg.cocycle.modulus,
        window=cfg.window,
        profile=cfg.profile,
        max_length=cfg.max_length,
    )
    try:
        if cfg.window == "single":
            _search_single_degree(cfg, report)
        else:
            _search_double_window(cfg, report)
    except BudgetExceeded as exc:
        report.refused = "%s (after %d probes)" % (exc, exc.probes)
        report.found = []
    return report


# ---------------------------------------------------------------------------
# independent small-length scan (cross-check for the join machinery)


def direct_single_degree_scan(q, max_len):
    """Every single-degree cycle of length <= max_len, by a joint-residual
    scan over all indices with restarts at closed sub-cycles.  Exponential;
    intended for small lengths as an independent check of the join search."""
    terms = []
    for u in range(q.size):
        for a in range(q.size):
            for b in range(q.size):
                if b == a:
                    continue
                for c in range(q.size):
                    if c == b:
                        continue
                    terms.append((0, u, (a, b, c)))
    f_img = {}
    g_img = {}
    f_cancel = {}
    g_cancel = {}
    for t in terms:
        f_img[t] = tuple(f_map(Chain(3, True, {t: 1})).terms.items())
        g_img[t] = tuple(g_map(Chain(3, True, {t: 1}), q).terms.items())
        for key, s in f_img[t]:
            f_cancel.setdefault(key, []).append((t, s))
        for key, s in g_img[t]:
            g_cancel.setdefault(key, []).append((t, s))

    results = set()

    def note(family):
        chain = _chain_of(family)
        if length(chain) == len(family):
            results.add(_sign_normal_chain(chain))

    def extend(family, fres, gres, anchor):
        depth = len(family)
        if not fres and not gres and depth >= 2:
            note(family)
        if depth == max_len:
            return
        rem = max_len - depth
        if fres and sum(map(abs, fres.values())) > 3 * rem:
            return
        if gres and sum(map(abs, gres.values())) > 3 * rem:
            return
        if fres:
            key = min(fres)
            need = 1 if fres[key] > 0 else -1
            choices = [(-need * s, t) for t, s in f_cancel.get(key, ())]
        elif gres:
            key = min(gres)
            need = 1 if gres[key] > 0 else -1
            choices = [(-need * s, t) for t, s in g_cancel.get(key, ())]
        else:
            # residuals closed: start another component at or above the anchor
            choices = [(1, t) for t in terms] + [(-1, t) for t in terms]
        for sign, t in choices:
            if t < anchor or (t == anchor and sign == -1):
                continue
            if (-sign, t) in family:
                continue
            nf = dict(fres)
            for k2, s2 in f_img[t]:
                v = nf.get(k2, 0) + sign * s2
                if v:
                    nf[k2] = v
                else:
                    nf.pop(k2, None)
            ng = dict(gres)
            for k2, s2 in g_img[t]:
                v = ng.get(k2, 0) + sign * s2
                if v:
                    ng[k2] = v
                else:
                    ng.pop(k2, None)
            extend(family + [(sign, t)], nf, ng, anchor)

    for t in terms:
        extend([(1, t)], dict(f_img[t]), dict(g_img[t]), t)
    return results
