"""Succinct encoding of a rooted triangulation guided by its wood.

The encoder walks the colour-2 tree of the wood and emits three parts: a
balanced-parenthesis word for the tree, one small record per doubled edge
saying where its two extremities reattach, and a colour word from which
every remaining edge can be replayed.  ``decode`` rebuilds the embedded
triangulation and the wood up to relabeling.  ``serialize`` packs the
parts into a framed byte stream (``.gsc``); every way a stream can be
unusable maps to a typed error rather than a crash.
"""

from __future__ import annotations

from .core_map import Map, validate_triangulation
from .errors import (
    BadMagic,
    LengthMismatch,
    MalformedSpecial,
    MalformedW,
    NonTriangulable,
    NotTraversalWood,
    TruncatedStream,
    UnmatchedColor1,
)
from .wood import GSchnyderWood, SpecialSide, WoodSpecial

MAGIC = b"GSC1"


# ------------------------------------------------------------------ records


class SpecialCode:
    """Reattachment record for one doubled edge.

    Each extremity is addressed by the tree-walk gap it is swept in and by
    its rank among special extremities of that gap, in sweep order.  The
    two sides carry a colour and a direction bit; direction 0 means the
    side points away from the first extremity's vertex.
    """

    __slots__ = (
        "gap_a",
        "rank_a",
        "gap_b",
        "rank_b",
        "color_a",
        "dir_a",
        "color_b",
        "dir_b",
    )

    def __init__(
        self,
        gap_a: int,
        rank_a: int,
        gap_b: int,
        rank_b: int,
        color_a: int,
        dir_a: int,
        color_b: int,
        dir_b: int,
    ) -> None:
        self.gap_a = gap_a
        self.rank_a = rank_a
        self.gap_b = gap_b
        self.rank_b = rank_b
        self.color_a = color_a
        self.dir_a = dir_a
        self.color_b = color_b
        self.dir_b = dir_b

    def _key(self) -> tuple[int, ...]:
        return (
            self.gap_a,
            self.rank_a,
            self.gap_b,
            self.rank_b,
            self.color_a,
            self.dir_a,
            self.color_b,
            self.dir_b,
        )

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SpecialCode) and self._key() == other._key()

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return "SpecialCode" + repr(self._key())


class CodeWords:
    """Complete code of a triangulation: tree word, records, colour word."""

    __slots__ = ("n", "g", "w", "specials", "wp")

    def __init__(
        self, n: int, g: int, w: str, specials: list[SpecialCode], wp: str
    ) -> None:
        self.n = n
        self.g = g
        self.w = w
        self.specials = specials
        self.wp = wp

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, CodeWords)
            and self.n == other.n
            and self.g == other.g
            and self.w == other.w
            and self.specials == other.specials
            and self.wp == other.wp
        )

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return (
            f"CodeWords(n={self.n}, g={self.g}, |w|={len(self.w)}, "
            f"specials={len(self.specials)}, |wp|={len(self.wp)})"
        )


# ---------------------------------------------------------------- tree walk


def _tree_walk(
    prv: list[int], opp: list[int], inside: bytearray, d0: int
) -> tuple[list[int], list[list[int]]]:
    """Walk the face of a subgraph, starting with the departure d0.

    After each departure the walk turns ccw from the brin of arrival until
    the next subgraph brin, which becomes the following departure; the
    passed-over brins form that departure's gap.  ``sweeps[j]`` is the gap
    swept just before departure j; the gap after the final departure wraps
    around to index 0.  Every brin outside the subgraph is swept exactly
    once per incident face side.
    """
    deps = [d0]
    sweeps: list[list[int]] = [[]]
    d = d0
    while True:
        a = opp[d]
        sweep: list[int] = []
        t = prv[a]
        while not inside[t]:
            sweep.append(t)
            t = prv[t]
        if t == d0:
            sweeps[0] = sweep
            break
        deps.append(t)
        sweeps.append(sweep)
        d = t
    return deps, sweeps


def _chrono(sweeps: list[list[int]]):
    """Gaps in the order the walk actually sweeps them (wrap gap last)."""
    for j in range(1, len(sweeps)):
        yield sweeps[j]
    yield sweeps[0]


# ------------------------------------------------------------------- encode


def encode(m: Map, wood: GSchnyderWood, force: bool = False) -> CodeWords:
    """Turn a wood-carrying triangulation into its three-part code.

    Only woods built by compute_schnyder are accepted: the colour word
    relies on every plain colour-1 edge showing its outgoing brin to the
    walk before its ingoing one, which holds for traversal output.  With
    force=True a foreign wood is attempted anyway; the order property is
    still verified and violations raise NotTraversalWood.
    """
    if wood.map is not m:
        raise ValueError("wood was computed for a different map")
    if not wood.from_traversal and not force:
        raise NotTraversalWood(
            "wood does not come from the traversal; pass force=True to try anyway"
        )
    n = m.n_vertices
    g = m.genus
    ne = m.n_edges
    nb = 2 * ne
    color = wood.color
    out = wood.out
    opp = [b ^ 1 for b in range(nb)]
    prv = m.prev

    in_tree = bytearray(nb)
    tree_edges = 0
    for e in range(ne):
        if color[e] == 2 or e == wood.e02 or e == wood.e12:
            in_tree[2 * e] = 1
            in_tree[2 * e + 1] = 1
            tree_edges += 1
    if tree_edges != n - 1:
        raise NotTraversalWood(
            f"{tree_edges} colour-2 edges cannot span {n} vertices"
        )

    d0 = m.phi(wood.b_star)  # tree brin leaving the root corner toward v0
    deps, sweeps = _tree_walk(prv, opp, in_tree, d0)
    if len(deps) != 2 * (n - 1):
        raise NotTraversalWood("colour-2 edges do not form a spanning tree")

    seen = bytearray(ne)
    bits: list[str] = []
    for d in deps:
        e = d >> 1
        if seen[e]:
            bits.append("0")
        else:
            seen[e] = 1
            bits.append("1")
    w = "".join(bits)

    # locate each special extremity inside the tree walk
    special_edges = {sp.edge for sp in wood.specials}
    pos: dict[int, tuple[int, int]] = {}
    for j, sweep in enumerate(sweeps):
        r = 0
        for t in sweep:
            if t >> 1 in special_edges:
                pos[t] = (j, r)
                r += 1
    records: list[SpecialCode] = []
    for sp in wood.specials:
        e = sp.edge
        if 2 * e not in pos or 2 * e + 1 not in pos:
            raise NotTraversalWood(f"special edge {e} missing from the walk")
        ga, ra = pos[2 * e]
        gb, rb = pos[2 * e + 1]
        ca, da = sp.side_a.color, sp.side_a.out & 1
        cb, db = sp.side_b.color, sp.side_b.out & 1
        if gb < ga:
            # orient every record with its earlier extremity first so the
            # code does not depend on how brins happen to be numbered
            ga, ra, gb, rb = gb, rb, ga, ra
            ca, da, cb, db = cb, 1 - db, ca, 1 - da
        records.append(SpecialCode(ga, ra, gb, rb, ca, da, cb, db))

    # colour word along the walk of tree + special edges
    in_cut = bytearray(in_tree)
    for e in special_edges:
        in_cut[2 * e] = 1
        in_cut[2 * e + 1] = 1
    deps2, sweeps2 = _tree_walk(prv, opp, in_cut, d0)
    if len(deps2) != 2 * (n - 1 + 2 * g):
        raise NotTraversalWood("tree plus special edges do not cut a single face")
    out_seen = bytearray(ne)
    bits = []
    for sweep in _chrono(sweeps2):
        for t in sweep:
            e = t >> 1
            c = color[e]
            if c == 0:
                if out[e] == t:
                    bits.append("0")
            elif c == 1:
                if out[e] == t:
                    out_seen[e] = 1
                else:
                    if not out_seen[e]:
                        raise NotTraversalWood(
                            f"colour-1 edge {e} met at its ingoing brin first"
                        )
                    bits.append("1")
    wp = "".join(bits)
    if len(wp) != 2 * n - 6 + 4 * g:
        raise NotTraversalWood(
            f"colour word has {len(wp)} bits, expected {2 * n - 6 + 4 * g}"
        )
    return CodeWords(n, g, w, records, wp)


# -------------------------------------------------------------- byte stream


def _write_varint(buf: bytearray, x: int) -> None:
    while True:
        b = x & 0x7F
        x >>= 7
        if x:
            buf.append(b | 0x80)
        else:
            buf.append(b)
            return


def _read_varint(data: bytes, off: int) -> tuple[int, int]:
    x = 0
    shift = 0
    while True:
        if off >= len(data):
            raise TruncatedStream("stream ends inside a varint")
        byte = data[off]
        off += 1
        x |= (byte & 0x7F) << shift
        if not byte & 0x80:
            return x, off
        shift += 7
        if shift > 63:
            raise LengthMismatch("varint runs past 64 bits")


def _pack_bits(s: str) -> bytes:
    nbytes = (len(s) + 7) // 8
    if not nbytes:
        return b""
    val = int(s, 2) << (8 * nbytes - len(s))
    return val.to_bytes(nbytes, "big")


def _unpack_bits(data: bytes, off: int, length: int) -> tuple[str, int]:
    nbytes = (length + 7) // 8
    if off + nbytes > len(data):
        raise TruncatedStream("stream ends inside a bit field")
    if not nbytes:
        return "", off
    val = int.from_bytes(data[off : off + nbytes], "big")
    pad = 8 * nbytes - length
    if val & ((1 << pad) - 1):
        raise LengthMismatch("nonzero padding bits")
    return format(val >> pad, f"0{length}b"), off + nbytes


def serialize(code: CodeWords) -> bytes:
    buf = bytearray(MAGIC)
    _write_varint(buf, code.n)
    _write_varint(buf, code.g)
    buf += _pack_bits(code.w)
    for sp in code.specials:
        _write_varint(buf, sp.gap_a)
        _write_varint(buf, sp.rank_a)
        _write_varint(buf, sp.gap_b)
        _write_varint(buf, sp.rank_b)
        buf.append(
            sp.color_a | sp.dir_a << 2 | sp.color_b << 3 | sp.dir_b << 5
        )
    buf += _pack_bits(code.wp)
    return bytes(buf)


def deserialize(data: bytes) -> CodeWords:
    if len(data) < 4:
        raise TruncatedStream("stream shorter than the magic")
    if data[:4] != MAGIC:
        raise BadMagic(f"bad magic {data[:4]!r}")
    off = 4
    n, off = _read_varint(data, off)
    g, off = _read_varint(data, off)
    if n < 4:
        raise MalformedW(f"vertex count {n} too small")
    w, off = _unpack_bits(data, off, 2 * n - 2)
    specials: list[SpecialCode] = []
    for _ in range(2 * g):
        ga, off = _read_varint(data, off)
        ra, off = _read_varint(data, off)
        gb, off = _read_varint(data, off)
        rb, off = _read_varint(data, off)
        if off >= len(data):
            raise TruncatedStream("stream ends before a side-flags byte")
        flags = data[off]
        off += 1
        if flags & 0xC0:
            raise MalformedSpecial("reserved flag bits set")
        specials.append(
            SpecialCode(
                ga, ra, gb, rb, flags & 3, flags >> 2 & 1, flags >> 3 & 3, flags >> 5 & 1
            )
        )
    wp, off = _unpack_bits(data, off, 2 * n - 6 + 4 * g)
    if off != len(data):
        raise LengthMismatch(f"{len(data) - off} trailing bytes")
    return CodeWords(n, g, w, specials, wp)


# ------------------------------------------------------------------- decode

# rebuild workspace brin tags
_TREE = 0
_ROOT01 = 1
_SPEC = 2
_OUT0 = 3
_OUT1 = 4
_IN1 = 5
_PH = 6
_C1OUT = 7
_C1IN = 8
_C0OUT = 9
_C0IN = 10
_DEAD = 11

_REAL = frozenset((_TREE, _ROOT01, _SPEC, _C1OUT, _C1IN, _C0OUT, _C0IN))


def _check_words(code: CodeWords) -> None:
    n, g = code.n, code.g
    if n < 4:
        raise MalformedW(f"vertex count {n} too small")
    w = code.w
    if len(w) != 2 * n - 2:
        raise MalformedW(f"tree word has {len(w)} bits, expected {2 * n - 2}")
    depth = 0
    opens = 0
    root_children = 0
    for ch in w:
        if ch == "1":
            if depth == 0:
                root_children += 1
            depth += 1
            opens += 1
        elif ch == "0":
            depth -= 1
            if depth < 0:
                raise MalformedW("tree word closes more than it opened")
        else:
            raise MalformedW(f"tree word holds a {ch!r}")
    if depth:
        raise MalformedW("tree word is unbalanced")
    if opens != n - 1:
        raise MalformedW(f"tree word opens {opens} edges, expected {n - 1}")
    if root_children < 2:
        # the root corner edge joins the first and last root child, which
        # must be distinct vertices or it degenerates into a loop
        raise MalformedW("tree root has fewer than two children")
    if len(code.specials) != 2 * g:
        raise MalformedSpecial(
            f"{len(code.specials)} special records for genus {g}"
        )
    if len(code.wp) != 2 * n - 6 + 4 * g:
        raise MalformedW(
            f"colour word has {len(code.wp)} bits, expected {2 * n - 6 + 4 * g}"
        )
    for ch in code.wp:
        if ch not in "01":
            raise MalformedW(f"colour word holds a {ch!r}")


class _Rebuild:
    """Mutable half-edge soup that grows back into a triangulation.

    Brins live in parallel arrays; nxt is the cw rotation successor, prv
    its inverse, so prv chains enumerate a vertex ccw.  Stubs are brins
    whose far half is a placeholder off every rotation, which makes the
    face walk take a U-turn there.
    """

    __slots__ = (
        "code",
        "n",
        "g",
        "origin",
        "nxt",
        "prv",
        "opp",
        "tag",
        "up",
        "v1v",
        "b01v0",
        "b01v1",
        "spec_brin",
        "spec_rec",
    )

    def __init__(self, code: CodeWords) -> None:
        self.code = code
        self.n = code.n
        self.g = code.g
        self.origin: list[int] = []
        self.nxt: list[int] = []
        self.prv: list[int] = []
        self.opp: list[int] = []
        self.tag: list[int] = []
        self.up: list[int] = [-1] * code.n
        self.v1v = -1
        self.b01v0 = -1
        self.b01v1 = -1
        self.spec_brin: list[list[int]] = [[-1, -1] for _ in code.specials]
        self.spec_rec: dict[int, tuple[int, int]] = {}

    # ------------------------------------------------------------ plumbing

    def _new(self, v: int, tg: int) -> int:
        b = len(self.origin)
        self.origin.append(v)
        self.nxt.append(b)
        self.prv.append(b)
        self.opp.append(-1)
        self.tag.append(tg)
        return b

    def _ins_ccw(self, x: int, y: int) -> None:
        """Splice fresh brin y immediately ccw after x."""
        prv, nxt = self.prv, self.nxt
        p = prv[x]
        nxt[p] = y
        prv[y] = p
        nxt[y] = x
        prv[x] = y

    def _ins_cw(self, x: int, y: int) -> None:
        """Splice fresh brin y immediately cw after x."""
        prv, nxt = self.prv, self.nxt
        s = nxt[x]
        nxt[x] = y
        prv[y] = x
        nxt[y] = s
        prv[s] = y

    def _stub(self, v: int, tg: int) -> int:
        s = self._new(v, tg)
        p = self._new(-1, _PH)
        self.opp[s] = p
        self.opp[p] = s
        return s

    # ------------------------------------------------------ step 1: tree

    def build_tree(self) -> None:
        """Grow the vertex tree from the parenthesis word.

        Vertex 0 is the tree root; the others are numbered in first-visit
        order, so the root corner's near vertex is 1 and its far vertex is
        the last child hung off the root.  Children attach ccw in walk
        order, which makes the first allocated brin the walk's starting
        departure.
        """
        opp = self.opp
        up = self.up
        cursor = [-1] * self.n
        stack = [0]
        cur = 0
        nv = 1
        for ch in self.code.w:
            if ch == "1":
                child = nv
                nv += 1
                d = self._new(cur, _TREE)
                u = self._new(child, _TREE)
                opp[d] = u
                opp[u] = d
                if cursor[cur] >= 0:
                    self._ins_ccw(cursor[cur], d)
                cursor[cur] = d
                up[child] = u
                cursor[child] = u
                if cur == 0:
                    self.v1v = child
                stack.append(child)
                cur = child
            else:
                stack.pop()
                cur = stack[-1]
        a = self._new(1, _ROOT01)
        b = self._new(self.v1v, _ROOT01)
        opp[a] = b
        opp[b] = a
        self._ins_ccw(up[1], a)
        self._ins_cw(up[self.v1v], b)
        self.b01v0 = a
        self.b01v1 = b

    # -------------------------------------------------- step 2: specials

    def attach_specials(self) -> None:
        """Hang special extremities into their recorded tree-walk gaps.

        Gap j is anchored at the brin the walk arrives on before sweeping
        it, except at vertex 1 where the root-corner edge is swept first
        and extremities must stay behind it to keep the root face a
        triangle.
        """
        n = self.n
        origin, opp = self.origin, self.opp
        inside = bytearray(len(origin))
        for b in range(2 * (n - 1)):
            inside[b] = 1
        deps, _ = _tree_walk(self.prv, opp, inside, 0)
        ngaps = len(deps)
        by_gap: dict[int, list[tuple[int, int, int]]] = {}
        for i, sp in enumerate(self.code.specials):
            for which, gp, rk, col in (
                (0, sp.gap_a, sp.rank_a, sp.color_a),
                (1, sp.gap_b, sp.rank_b, sp.color_b),
            ):
                if not 0 <= gp < ngaps:
                    raise MalformedSpecial(f"gap {gp} outside the tree walk")
                if col == 3:
                    raise MalformedSpecial("special side colour 3")
                by_gap.setdefault(gp, []).append((rk, i, which))
        for gp, items in by_gap.items():
            items.sort()
            if [r for r, _, _ in items] != list(range(len(items))):
                raise MalformedSpecial(f"ranks at gap {gp} are not 0..k-1")
            a = opp[deps[gp - 1]]
            # the first arrival at vertex 1 sweeps the root-corner edge
            # before anything else, so extremities of that gap must queue
            # behind it or they would break into the root face
            cur = self.b01v0 if a == self.up[1] else a
            for _, i, which in items:
                s = self._new(origin[a], _SPEC)
                self._ins_ccw(cur, s)
                cur = s
                self.spec_brin[i][which] = s
                self.spec_rec[s] = (i, which)
        for pair in self.spec_brin:
            p, q = pair
            opp[p] = q
            opp[q] = p

    # ----------------------------------------------------- step 3: stubs

    def _side_into_sector(self, b: int, near: bool) -> tuple[int, bool]:
        """Colour of the special side facing a sector, and whether it
        points out of the sector's vertex.  The near side faces the sector
        ending at b; the far side faces the one starting there."""
        i, which = self.spec_rec[b]
        sp = self.code.specials[i]
        if near == (which == 0):
            c, d = sp.color_a, sp.dir_a
        else:
            c, d = sp.color_b, sp.dir_b
        return c, d == which

    def place_stubs(self) -> None:
        """Give every sector its outgoing colour-0/1 stubs.

        Sectors are the ccw runs between cuts (the parent edge at plain
        vertices, the root corner at its two end vertices, special brins
        everywhere).  Each sector gets an outgoing-0 stub right before its
        first child and an outgoing-1 stub right after its last child,
        except where a special side already provides that outgoing colour;
        the two sectors holding the root corner get nothing.
        """
        n = self.n
        tag, prv, up = self.tag, self.prv, self.up
        v1 = self.v1v
        for v in range(1, n):
            start = self.b01v0 if v == 1 else up[v]
            ring = [start]
            t = prv[start]
            while t != start:
                ring.append(t)
                t = prv[t]
            elements = ring if v in (1, v1) else ring[1:]
            sectors: list[tuple[int, list[int], int]] = []
            left = -1
            elems: list[int] = []
            for b in elements:
                if tag[b] == _SPEC:
                    sectors.append((left, elems, b))
                    left = b
                    elems = []
                else:
                    elems.append(b)
            sectors.append((left, elems, -1))
            root_brin = self.b01v0 if v == 1 else self.b01v1 if v == v1 else -1
            for lft, mid, rgt in sectors:
                if root_brin >= 0 and root_brin in mid:
                    continue
                out0 = out1 = True
                if lft >= 0:
                    c, outward = self._side_into_sector(lft, near=False)
                    out0 = not (c == 0 and outward)
                if rgt >= 0:
                    c, outward = self._side_into_sector(rgt, near=True)
                    out1 = not (c == 1 and outward)
                children = [b for b in mid if tag[b] == _TREE and b != up[v]]
                if children:
                    if out0:
                        self._ins_cw(children[0], self._stub(v, _OUT0))
                    if out1:
                        self._ins_ccw(children[-1], self._stub(v, _OUT1))
                else:
                    anchor = rgt if rgt >= 0 else up[v]
                    if out1:
                        o1 = self._stub(v, _OUT1)
                        self._ins_cw(anchor, o1)
                        anchor = o1
                    if out0:
                        self._ins_cw(anchor, self._stub(v, _OUT0))

    # -------------------------------------------- step 4: ingoing colour 1

    def _cut_walk(self) -> tuple[list[int], list[list[int]]]:
        tag = self.tag
        inside = bytearray(len(self.origin))
        for b, tg in enumerate(tag):
            if tg == _TREE or tg == _SPEC:
                inside[b] = 1
        return _tree_walk(self.prv, self.opp, inside, 0)

    def attach_heads(self) -> None:
        """Factor the colour word into runs and plant ingoing-1 stubs.

        Each 0 of the colour word consumes the next outgoing-0 stub of the
        cut walk; the 1s before it become ingoing-1 stubs packed ccw just
        before that stub, and the trailing run lands at vertex n-1 against
        the root-corner edge.
        """
        n, g = self.n, self.g
        deps, sweeps = self._cut_walk()
        if len(deps) != 2 * (n - 1 + 2 * g):
            raise MalformedSpecial("special edges do not cut a single face open")
        tag, origin = self.tag, self.origin
        anchors = [
            b for sweep in _chrono(sweeps) for b in sweep if tag[b] == _OUT0
        ]
        runs: list[int] = []
        ones = 0
        for ch in self.code.wp:
            if ch == "1":
                ones += 1
            else:
                runs.append(ones)
                ones = 0
        if len(runs) != len(anchors):
            raise UnmatchedColor1(
                f"{len(runs)} colour-0 marks for {len(anchors)} sockets"
            )
        for b, r in zip(anchors, runs):
            for _ in range(r):
                self._ins_cw(b, self._stub(origin[b], _IN1))
        for _ in range(ones):
            self._ins_cw(self.b01v1, self._stub(self.v1v, _IN1))

    # ------------------------------------------------ step 5: colour-1 ties

    def match_color1(self) -> None:
        """Close colour-1 edges by parenthesis-matching stub sweeps."""
        _, sweeps = self._cut_walk()
        tag, opp = self.tag, self.opp
        stack: list[int] = []
        for sweep in _chrono(sweeps):
            for t in sweep:
                tg = tag[t]
                if tg == _OUT1:
                    stack.append(t)
                elif tg == _IN1:
                    if not stack:
                        raise UnmatchedColor1("ingoing colour-1 with no open tail")
                    o = stack.pop()
                    tag[opp[o]] = _DEAD
                    tag[opp[t]] = _DEAD
                    opp[o] = t
                    opp[t] = o
                    tag[o] = _C1OUT
                    tag[t] = _C1IN
        if stack:
            raise UnmatchedColor1(f"{len(stack)} colour-1 tails left open")

    # ------------------------------------------------ step 6: triangulate

    def triangulate(self) -> None:
        """Fan every big face from its apex with the leftover 0-stubs.

        A face's apex corner is the one whose cw-next brin is outgoing
        colour 1; the root-corner edge counts as outgoing at vertex 1.
        Walking the contour from the apex, every corner except the apex
        and its two neighbours must carry exactly one stub, and the stubs
        become the colour-0 fan into the apex.
        """
        origin, nxt, opp, tag = self.origin, self.nxt, self.opp, self.tag
        nb = len(origin)
        real = _REAL
        visited = bytearray(nb)
        faces: list[tuple[list[int], list[tuple[int, int]]]] = []
        for b0 in range(nb):
            if visited[b0] or tag[b0] not in real:
                continue
            reals: list[int] = []
            spikes: list[tuple[int, int]] = []
            cur = b0
            while True:
                visited[cur] = 1
                tg = tag[cur]
                if tg in real:
                    reals.append(cur)
                elif tg == _OUT0:
                    spikes.append((len(reals) - 1, cur))
                elif tg != _PH:
                    raise NonTriangulable("stray half-edge on a face walk")
                cur = opp[nxt[cur]]
                if cur == b0:
                    break
            faces.append((reals, spikes))
        b01v0 = self.b01v0
        for reals, spikes in faces:
            size = len(reals)
            if not spikes:
                if size != 3:
                    raise NonTriangulable(f"a {size}-gon has no fan stubs")
                continue
            cand = [
                k
                for k, h in enumerate(reals)
                if nxt[h] == b01v0 or tag[nxt[h]] == _C1OUT
            ]
            if len(cand) != 1:
                raise NonTriangulable(
                    f"{len(cand)} apex corners on a {size}-gon"
                )
            k = cand[0]
            spike_at: list[int] = [-1] * size
            for idx, s in spikes:
                j = (idx - k) % size
                if spike_at[j] >= 0:
                    raise NonTriangulable("two fan stubs at one corner")
                spike_at[j] = s
            if spike_at[0] >= 0 or spike_at[1] >= 0 or spike_at[size - 1] >= 0:
                raise NonTriangulable("fan stub against the apex")
            apex = reals[k]
            vf = origin[apex]
            cur = apex
            for j in range(size - 2, 1, -1):
                s = spike_at[j]
                if s < 0:
                    raise NonTriangulable("corner without a fan stub")
                p = opp[s]
                origin[p] = vf
                tag[s] = _C0OUT
                tag[p] = _C0IN
                self._ins_cw(cur, p)
                cur = p
        # the soup must now be all triangles
        visited = bytearray(nb)
        for b0 in range(nb):
            if visited[b0] or tag[b0] == _DEAD:
                continue
            if tag[b0] not in real:
                raise NonTriangulable("unresolved stub after fanning")
            size = 0
            cur = b0
            while True:
                visited[cur] = 1
                size += 1
                cur = opp[nxt[cur]]
                if cur == b0:
                    break
            if size != 3:
                raise NonTriangulable(f"a {size}-gon survived fanning")

    # -------------------------------------------------- step 7: extraction

    def extract(self) -> tuple[Map, GSchnyderWood]:
        """Renumber the soup into a Map and read the wood off the tags.

        The root-corner edge becomes edge 0 with its corner brin first, and
        vertex ids 0 and 1 swap so the corner vertex gets id 0.  The corner
        is then the smallest vertex of the root face, which is where a wood
        anchors its roles.
        """
        origin, nxt, opp, tag = self.origin, self.nxt, self.opp, self.tag
        nb = len(origin)
        n, g = self.n, self.g
        new_of = [-1] * nb
        ne = 0
        for x in [self.b01v0, *range(nb)]:
            if tag[x] == _DEAD or new_of[x] >= 0:
                continue
            new_of[x] = 2 * ne
            new_of[opp[x]] = 2 * ne + 1
            ne += 1
        origin2 = [0] * (2 * ne)
        fol2 = [0] * (2 * ne)
        for x in range(nb):
            nx = new_of[x]
            if nx >= 0:
                o = origin[x]
                origin2[nx] = o ^ 1 if o < 2 else o
                fol2[nx] = new_of[nxt[x]]
        mp = Map.from_arrays(origin2, fol2, n_vertices=n)
        if mp.genus != g:
            raise NonTriangulable(
                f"rebuilt surface has genus {mp.genus}, stream says {g}"
            )
        check = validate_triangulation(mp)
        if not check.is_triangulation:
            kind, who = check.violations[0]
            raise NonTriangulable(f"rebuilt map is not simple: {kind} {who}")
        mp.root_face = mp.face_of[0]

        color = [-1] * ne
        out = [-1] * ne
        for x in range(nb):
            nx = new_of[x]
            if nx < 0:
                continue
            tg = tag[x]
            if tg == _C1OUT:
                color[nx >> 1] = 1
                out[nx >> 1] = nx
            elif tg == _C0OUT:
                color[nx >> 1] = 0
                out[nx >> 1] = nx
            elif tg == _TREE and x & 1 and origin[x] not in (1, self.v1v):
                color[nx >> 1] = 2
                out[nx >> 1] = nx
        wood_specials: list[WoodSpecial] = []
        for i, sp in enumerate(self.code.specials):
            p, q = self.spec_brin[i]
            np_, nq = new_of[p], new_of[q]
            sa = SpecialSide(sp.color_a, np_ if sp.dir_a == 0 else nq)
            sb = SpecialSide(sp.color_b, np_ if sp.dir_b == 0 else nq)
            if np_ & 1:
                wood_specials.append(WoodSpecial(nq >> 1, sb, sa))
            else:
                wood_specials.append(WoodSpecial(np_ >> 1, sa, sb))
        wd = GSchnyderWood(
            mp, mp.root_face, color, out, wood_specials, from_traversal=True
        )
        return mp, wd


def decode(code: CodeWords) -> tuple[Map, GSchnyderWood]:
    """Rebuild the triangulation and its wood from a three-part code.

    Raises MalformedW, MalformedSpecial, UnmatchedColor1 or
    NonTriangulable when the code cannot come from an encode; a decoded
    result is always a simple triangulation of the declared genus, though
    only wood validation can certify a foreign stream end to end.
    """
    _check_words(code)
    ws = _Rebuild(code)
    ws.build_tree()
    ws.attach_specials()
    ws.place_stubs()
    ws.attach_heads()
    ws.match_color1()
    ws.triangulate()
    return ws.extract()
