"""Structural operations on 3-terms: types, symmetries, connected families.

A 3-term (n, u; a, b, c) falls into one of four types according to whether
a = c and whether a^b = c; the type governs which faces of f and g
degenerate.  The reverse of a term lives over the dual quandle and swaps
types 1 and 2; the reflection is a mirror symmetry specific to dihedral
quandles.

A set of same-degree 3-terms is f-connected when its f-image vanishes and no
proper nonempty subset has vanishing f-image (g-connected likewise).  Since
f never consults the quandle operation, the f-connected families of a given
size admit a quandle-independent symbolic census; it is re-derived here by a
guided depth-first search over symbolic colors and deduplicated up to global
sign, symbol renaming and the two concrete shapes of a bigon term
(a, b, a) ~ (b, a, b).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .quandles import FiniteQuandle, QuandleError, dual, TAU_O6
from .chains import Chain, ChainError, f_map, g_map, sigma_shift
from . import chains


class StructureError(ValueError):
    pass


# ---------------------------------------------------------------------------
# term types and chain symmetries


def classify_type(t, q):
    """Type of an arity-3 term: 0 if a = c and a^b = c, 1 if only a = c,
    2 if only a^b = c, 3 otherwise."""
    _, _, colors = t
    if len(colors) != 3:
        raise StructureError("type classification needs an arity-3 term")
    a, b, c = colors
    closes = a == c
    lands = q.apply(a, b) == c
    if closes and lands:
        return 0
    if closes:
        return 1
    if lands:
        return 2
    return 3


def relabel_chain(chain, perm):
    """Apply an element relabelling to every index and color."""
    result = Chain(chain.arity, chain.graded)
    for (n, u, colors), coeff in chain.terms.items():
        t = (n, perm[u] if chain.graded else 0, tuple(perm[x] for x in colors))
        result.terms[t] = result.terms.get(t, 0) + coeff
        if result.terms[t] == 0:
            del result.terms[t]
    return result


def reverse(chain, q, pullback=None):
    """The reverse of a graded chain; the result lives over dual(q).

    Term-wise: degree n becomes -n, the index is pushed through the whole
    color word, and color i is pushed through the colors to its right.  An
    optional pullback permutation (an isomorphism dual(q) -> q, e.g. TAU_O6
    for the octahedral quandle) relabels the result back over q.
    """
    if not chain.graded:
        raise ChainError("reverse needs a graded chain")
    result = Chain(chain.arity, True)
    for (n, u, colors), coeff in chain.terms.items():
        new_colors = tuple(
            q.act_word(colors[i], colors[i + 1 :]) for i in range(len(colors))
        )
        t = (-n, q.act_word(u, colors), new_colors)
        result.terms[t] = result.terms.get(t, 0) + coeff
        if result.terms[t] == 0:
            del result.terms[t]
    if pullback is not None:
        result = relabel_chain(result, pullback)
    return result


def reverse_o6(chain, q):
    """Reverse an octahedral chain and relabel it back into O_6 via the
    2 <-> 5 isomorphism with the dual."""
    return reverse(chain, q, pullback=TAU_O6)


def _dihedral_check(q):
    n = q.size
    for a in range(n):
        for b in range(n):
            if q.table[a][b] != (2 * b - a) % n:
                raise QuandleError("reflection is defined for dihedral tables only")
    return n


def reflection(chain, q):
    """Mirror symmetry of dihedral chains: an involution commuting with both
    face maps.  Degree n is kept; the index w maps to (-1)^(n+1) w and color
    i to (-1)^n (x_{m+1-i} - w), everything mod the quandle size."""
    size = _dihedral_check(q)
    if not chain.graded:
        raise ChainError("reflection needs a graded chain")
    result = Chain(chain.arity, True)
    for (n, w, colors), coeff in chain.terms.items():
        s = -1 if n % 2 else 1
        new_w = (-s * w) % size
        new_colors = tuple((s * (x - w)) % size for x in reversed(colors))
        t = (n, new_w, new_colors)
        result.terms[t] = result.terms.get(t, 0) + coeff
        if result.terms[t] == 0:
            del result.terms[t]
    return result


# ---------------------------------------------------------------------------
# connected components of null families


@dataclass
class ComponentReport:
    mode: str
    components: list  # list of lists of (sign, term)
    residual: Chain | None

    @property
    def ok(self):
        return self.residual is None


def _image_of(signed_terms, mode, q, arity):
    chain = Chain.from_signed_terms(signed_terms, arity=arity, graded=True)
    return f_map(chain) if mode == "f" else g_map(chain, q)


def connected_components(signed_terms, mode, q):
    """Partition same-degree signed 3-terms into minimal null families.

    Input is a list of (sign, term) pairs, efficient (no term together with
    its negative) and of constant degree.  If the total image under the
    chosen face map vanishes, returns the finest partition into subsets with
    vanishing image, peeling lexicographically-least smallest null subsets
    (deterministic; a canonical choice where several finest partitions
    exist).  Otherwise reports the nonzero residual.
    """
    if mode not in ("f", "g"):
        raise StructureError("mode must be 'f' or 'g'")
    signed_terms = list(signed_terms)
    if not signed_terms:
        return ComponentReport(mode, [], None)
    arity = len(signed_terms[0][1][2])
    degrees = {t[0] for _, t in signed_terms}
    if len(degrees) != 1:
        raise StructureError("terms must share one degree")
    seen = set()
    for sign, t in signed_terms:
        if sign not in (1, -1):
            raise StructureError("signs must be +1 or -1")
        if (-sign, t) in seen:
            raise StructureError("input is not efficient: %r appears with both signs" % (t,))
        seen.add((sign, t))
    total = _image_of(signed_terms, mode, q, arity)
    if total:
        return ComponentReport(mode, [], total)

    remaining = sorted(range(len(signed_terms)), key=lambda i: (signed_terms[i][1], -signed_terms[i][0]))
    components = []
    while remaining:
        found = None
        for size in range(1, len(remaining) + 1):
            for combo in itertools.combinations(remaining, size):
                subset = [signed_terms[i] for i in combo]
                if not _image_of(subset, mode, q, arity):
                    found = combo
                    break
            if found:
                break
        components.append([signed_terms[i] for i in found])
        remaining = [i for i in remaining if i not in found]
    return ComponentReport(mode, components, None)


# ---------------------------------------------------------------------------
# symbolic census of f-connected families

MAX_FAMILY_SIZE = 5
_SYMBOLS = 5  # four distinct labels suffice for families of up to five terms


def _sym_f_image(colors):
    """Signed 2-faces of a symbolic color triple, degenerate faces dropped."""
    a, b, c = colors
    out = []
    if b != c:
        out.append(((b, c), -1))
    if a != c:
        out.append(((a, c), 1))
    if a != b:
        out.append(((a, b), -1))
    return out


def _family_f_sum(family):
    total = {}
    for sign, colors in family:
        for pair, s in _sym_f_image(colors):
            total[pair] = total.get(pair, 0) + sign * s
            if total[pair] == 0:
                del total[pair]
    return total


def _is_minimal_null(family):
    k = len(family)
    idx = range(k)
    for size in range(1, k):
        for combo in itertools.combinations(idx, size):
            if not _family_f_sum([family[i] for i in combo]):
                return False
    return True


def _symbolic_triples(nsym):
    return [
        (a, b, c)
        for a in range(nsym)
        for b in range(nsym)
        if b != a
        for c in range(nsym)
        if c != b
    ]


def _null_family_dfs(triples, size):
    """All efficient symbolic multisets of `size` signed triples with zero
    f-image and no null proper prefix.

    Quotient by global sign: the term with lex-least colors is taken
    positive and anchors the search; the remaining terms have colors no
    smaller than the anchor's.  Each step cancels the least nonzero residual
    face, which finds every minimal family at least once; results still need
    dedup and a full minimality check.
    """
    cancel = {}
    for colors in triples:
        for pair, s in _sym_f_image(colors):
            cancel.setdefault(pair, []).append((colors, s))

    results = set()

    def extend(family, residual, anchor_colors):
        if len(family) == size:
            if not residual:
                results.add(tuple(sorted(family)))
            return
        if not residual:
            return  # null proper prefix: cannot lead to a minimal family
        budget = 3 * (size - len(family))
        if sum(abs(v) for v in residual.values()) > budget:
            return
        pair = min(residual)
        need = 1 if residual[pair] > 0 else -1
        for colors, s in cancel.get(pair, ()):
            if colors < anchor_colors:
                continue
            sign = -need * s  # adding sign*colors moves residual[pair] toward 0
            if colors == anchor_colors and sign == -1:
                continue
            if (-sign, colors) in family:
                continue
            new_residual = dict(residual)
            for p2, s2 in _sym_f_image(colors):
                v = new_residual.get(p2, 0) + sign * s2
                if v:
                    new_residual[p2] = v
                else:
                    new_residual.pop(p2, None)
            extend(family + [(sign, colors)], new_residual, anchor_colors)

    for colors in triples:
        residual = {p: s for p, s in _sym_f_image(colors)}
        extend([(1, colors)], residual, colors)
    return [fam for fam in sorted(results) if _is_minimal_null(fam)]


def _bigon_normal_entry(sign, colors):
    a, b, c = colors
    if a == c:
        return (sign, "B", (min(a, b), max(a, b)))
    return (sign, "T", colors)


def _family_symbols(entries):
    syms = set()
    for _, _, colors in entries:
        syms.update(colors)
    return syms


def canonical_family(family):
    """Canonical form of a signed symbolic family: bigons collapsed to an
    unordered marker, then minimized over symbol bijections and global sign."""
    entries = [_bigon_normal_entry(sign, colors) for sign, colors in family]
    syms = sorted(_family_symbols(entries))
    best = None
    for perm in itertools.permutations(range(len(syms))):
        relab = {s: perm[i] for i, s in enumerate(syms)}
        for gsign in (1, -1):
            cand = []
            for sign, kind, colors in entries:
                new_colors = tuple(relab[x] for x in colors)
                if kind == "B":
                    new_colors = (min(new_colors), max(new_colors))
                cand.append((gsign * sign, kind, new_colors))
            cand = tuple(sorted(cand))
            if best is None or cand < best:
                best = cand
    return best


def _expand_pattern(pattern):
    """All concrete families realizing a bigon-collapsed pattern."""
    slots = []
    for sign, kind, colors in pattern:
        if kind == "T":
            slots.append([(sign, colors)])
        else:
            x, y = colors
            slots.append([(sign, (x, y, x)), (sign, (y, x, y))])
    for combo in itertools.product(*slots):
        yield tuple(sorted(combo))


def _family_is_valid(family):
    seen = set()
    for sign, colors in family:
        if any(colors[i] == colors[i + 1] for i in range(2)):
            return False
        if (-sign, colors) in seen:
            return False
        seen.add((sign, colors))
    return bool(family) and not _family_f_sum(family) and _is_minimal_null(family)


def _glue(family, mapping):
    return tuple(sorted((sign, tuple(mapping[x] for x in colors)) for sign, colors in family))


def _shape_preserving(pattern, mapping):
    """A symbol identification that keeps triangles triangles and bigons
    non-degenerate."""
    for _, kind, colors in pattern:
        if kind == "B":
            x, y = colors
            if mapping[x] == mapping[y]:
                return False
        else:
            a, b, c = colors
            if mapping[a] == mapping[b] or mapping[b] == mapping[c] or mapping[a] == mapping[c]:
                return False
    return True


def _partitions_of(symbols):
    """All partitions of a symbol list into nonempty blocks."""
    symbols = list(symbols)
    if not symbols:
        yield ()
        return
    head, rest = symbols[0], symbols[1:]
    for part in _partitions_of(rest):
        yield ((head,),) + part
        for i, block in enumerate(part):
            yield part[:i] + ((head,) + block,) + part[i + 1 :]


@dataclass(frozen=True)
class TemplateVariant:
    """One instantiable concrete shape of a family template: a symbol
    identification plus a choice of concrete bigon forms."""

    merge: tuple  # partition of the template symbols, sorted blocks
    entries: tuple  # ((sign, (x, y, z)), ...) over block representatives


@dataclass(frozen=True)
class FamilyTemplate:
    """A symbolic pattern whose admissible instantiations are minimal
    families with vanishing f-image."""

    size: int
    family_id: str
    symbols: int
    pattern: tuple  # canonical bigon-collapsed entries
    variants: tuple  # all valid TemplateVariants

    def render(self):
        names = "abcde"
        bits = []
        for sign, kind, colors in self.pattern:
            mark = "+" if sign > 0 else "-"
            if kind == "T":
                bits.append("%s(%s)" % (mark, ",".join(names[x] for x in colors)))
            else:
                bits.append("%s<%s>" % (mark, ",".join(names[x] for x in colors)))
        return " ".join(bits)


# Identification of the census output with its published labelling: the
# canonical pattern of each family, keyed by size and roman numeral.  Symbols
# a, b, c, d are 0, 1, 2, 3.  Golden index-pattern tables refer to these ids.
_T = lambda s, colors: (s, "T", colors)
_B = lambda s, colors: (s, "B", colors)
PATTERN_CATALOG = {
    2: {
        "i": (_B(1, (0, 1)), _B(-1, (0, 1))),
    },
    3: {
        "i": (_B(1, (0, 1)), _T(-1, (2, 0, 1)), _T(-1, (2, 1, 0))),
        "ii": (_B(1, (0, 1)), _T(-1, (0, 1, 2)), _T(-1, (1, 0, 2))),
    },
    4: {
        "i": (_T(1, (0, 1, 2)), _B(1, (0, 2)), _T(-1, (2, 0, 1)), _B(-1, (1, 2))),
        "ii": (_T(1, (0, 1, 2)), _T(1, (0, 2, 3)), _T(-1, (0, 1, 3)), _T(-1, (1, 2, 3))),
        "iii": (_T(1, (0, 1, 2)), _T(1, (1, 0, 2)), _T(-1, (0, 1, 3)), _T(-1, (1, 0, 3))),
        "iv": (_T(1, (2, 0, 1)), _T(1, (2, 1, 0)), _T(-1, (3, 0, 1)), _T(-1, (3, 1, 0))),
        "v": (_T(1, (2, 0, 1)), _T(1, (2, 1, 0)), _T(-1, (0, 1, 3)), _T(-1, (1, 0, 3))),
    },
    5: {
        "i": (_B(1, (0, 2)), _B(1, (1, 2)), _B(-1, (0, 1)), _T(-1, (0, 2, 1)), _T(-1, (1, 2, 0))),
        "ii": (_T(1, (0, 1, 2)), _B(1, (1, 3)), _T(-1, (0, 1, 3)), _T(-1, (0, 3, 2)), _T(-1, (3, 1, 2))),
        "iii": (_T(1, (0, 1, 2)), _B(1, (0, 3)), _T(-1, (0, 3, 2)), _T(-1, (3, 0, 1)), _T(-1, (3, 1, 2))),
        "iv": (_T(1, (0, 1, 2)), _B(1, (2, 3)), _T(-1, (0, 3, 2)), _T(-1, (0, 1, 3)), _T(-1, (1, 2, 3))),
        "v": (_T(1, (0, 1, 2)), _B(1, (0, 2)), _T(-1, (3, 0, 1)), _T(-1, (3, 1, 2)), _T(-1, (3, 2, 0))),
        "vi": (_T(1, (0, 1, 2)), _B(1, (0, 2)), _T(-1, (0, 1, 3)), _T(-1, (1, 2, 3)), _T(-1, (2, 0, 3))),
        "vii": (_T(1, (0, 1, 2)), _B(1, (0, 2)), _T(-1, (2, 0, 1)), _T(-1, (3, 1, 2)), _T(-1, (3, 2, 1))),
        "viii": (_T(1, (0, 1, 2)), _B(1, (0, 2)), _T(-1, (0, 1, 3)), _T(-1, (1, 0, 3)), _T(-1, (1, 2, 0))),
        "ix": (_T(1, (0, 1, 2)), _B(1, (0, 2)), _T(-1, (1, 2, 0)), _T(-1, (3, 0, 1)), _T(-1, (3, 1, 0))),
        "x": (_T(1, (2, 1, 0)), _B(1, (0, 2)), _T(-1, (0, 1, 3)), _T(-1, (0, 2, 1)), _T(-1, (1, 0, 3))),
    },
}


@lru_cache(maxsize=None)
def enumerate_f_connected(k):
    """Census of size-k families with vanishing, subset-minimal f-image.

    Brute-force symbolic enumeration, canonicalized up to global sign,
    symbol renaming and bigon shape; classes reachable from a larger class
    by a shape-preserving symbol identification are folded into it as a
    variant rather than counted separately.  Returns FamilyTemplates labelled
    against the catalogue above.  k = 1 yields nothing; sizes above
    MAX_FAMILY_SIZE are refused (the census cost grows steeply).
    """
    if k < 1:
        raise StructureError("family size must be positive")
    if k > MAX_FAMILY_SIZE:
        raise StructureError(
            "size %d is above the supported census limit %d" % (k, MAX_FAMILY_SIZE)
        )
    triples = _symbolic_triples(_SYMBOLS)
    families = _null_family_dfs(triples, k)
    classes = {}
    for fam in families:
        classes.setdefault(canonical_family(fam), fam)
    if not classes:
        return ()

    # Valid concrete expansions per class, keyed by canonical pattern.
    expansions = {}
    for pattern in classes:
        expansions[pattern] = [f for f in _expand_pattern(pattern) if _family_is_valid(f)]
        if not expansions[pattern]:
            raise StructureError("census class %r has no valid expansion" % (pattern,))

    # Shape-preserving degenerations: pattern -> {smaller pattern: variants}.
    degenerations = {p: {} for p in classes}
    for pattern in classes:
        syms = sorted(_family_symbols(pattern))
        for part in _partitions_of(syms):
            if len(part) == len(syms):
                continue
            blocks = tuple(tuple(sorted(b)) for b in sorted(part))
            mapping = {s: min(b) for b in blocks for s in b}
            if not _shape_preserving(pattern, mapping):
                continue
            variants = []
            for concrete in _expand_pattern(pattern):
                glued = _glue(concrete, mapping)
                if _family_is_valid(glued):
                    variants.append(TemplateVariant(blocks, glued))
            if variants:
                target = canonical_family(variants[0].entries)
                degenerations[pattern].setdefault(target, []).extend(variants)

    folded = set()
    for pattern in classes:
        folded.update(degenerations[pattern])

    templates = []
    for pattern in sorted(classes):
        if pattern in folded:
            continue
        syms = sorted(_family_symbols(pattern))
        identity = tuple((s,) for s in syms)
        variants = [TemplateVariant(identity, f) for f in expansions[pattern]]
        for target_variants in degenerations[pattern].values():
            variants.extend(target_variants)
        templates.append((pattern, tuple(variants)))

    # Every census class must be reachable from some kept template.
    reachable = set()
    for pattern, variants in templates:
        for v in variants:
            reachable.add(canonical_family(v.entries))
    missing = set(classes) - reachable
    if missing:
        raise StructureError("census classes not covered by templates: %r" % (missing,))

    catalog = {
        canonical_family(next(_expand_pattern(p))): rid
        for rid, p in PATTERN_CATALOG.get(k, {}).items()
    }
    out = []
    for pattern, variants in templates:
        rid = catalog.get(pattern)
        if rid is None:
            raise StructureError("census found an uncatalogued size-%d family: %r" % (k, pattern))
        out.append(
            FamilyTemplate(
                size=k,
                family_id="%d-%s" % (k, rid),
                symbols=len(_family_symbols(pattern)),
                pattern=pattern,
                variants=variants,
            )
        )
    if len(out) != len(PATTERN_CATALOG.get(k, {})):
        raise StructureError(
            "census size mismatch at k=%d: %d found, %d catalogued"
            % (k, len(out), len(PATTERN_CATALOG.get(k, {})))
        )
    order = {rid: i for i, rid in enumerate(PATTERN_CATALOG.get(k, {}))}
    out.sort(key=lambda t: order[t.family_id.split("-", 1)[1]])
    return tuple(out)


# ---------------------------------------------------------------------------
# concrete instantiation over a quandle


def instantiate_template(template, q, index, degree=0, signs=(1, -1)):
    """Yield concrete minimal f-null families over q as sorted tuples of
    (sign, term), one per admissible assignment, bigon shape and global sign.

    Instances may repeat when the pattern has internal symmetry; callers that
    need each family once should deduplicate on the yielded tuple.
    """
    n = q.size
    for variant in template.variants:
        reps = sorted({min(b) for b in variant.merge})
        for images in itertools.permutations(range(n), len(reps)):
            assign = dict(zip(reps, images))
            for gsign in signs:
                yield tuple(
                    sorted(
                        (
                            gsign * sign,
                            (degree, index, tuple(assign[x] for x in colors)),
                        )
                        for sign, colors in variant.entries
                    )
                )


def concrete_families(q, k, index, degree=0):
    """All distinct minimal f-null families of size k at one degree and
    index, instantiated from the symbolic census (k <= MAX_FAMILY_SIZE)."""
    seen = set()
    for template in enumerate_f_connected(k):
        for fam in instantiate_template(template, q, index, degree):
            seen.add(fam)
    return sorted(seen)
