"""Code words, byte stream framing, and the decode rebuild pipeline."""

from __future__ import annotations

import random

import pytest

from gschnyder import build_from_faces, maps_isomorphic
from gschnyder.codec import (
    MAGIC,
    CodeWords,
    SpecialCode,
    decode,
    deserialize,
    encode,
    serialize,
)
from gschnyder.errors import (
    BadMagic,
    GSchnyderError,
    LengthMismatch,
    MalformedSpecial,
    MalformedW,
    NonTriangulable,
    NotTraversalWood,
    TruncatedStream,
    UnmatchedColor1,
)
from gschnyder.generators import (
    grid_torus,
    handle_sum,
    planar_random,
    planar_stacked,
    refine,
)
from gschnyder.traversal import compute_schnyder
from gschnyder.wood import GSchnyderWood, woods_equivalent

TETRA = [(0, 1, 2), (0, 2, 3), (0, 3, 1), (1, 3, 2)]


def tetra_map():
    return build_from_faces(4, TETRA)


def tetra_code():
    m = tetra_map()
    return m, encode(m, compute_schnyder(m, 0))


# ------------------------------------------------------------ encode basics


def test_tetra_word_lengths_and_content():
    _, code = tetra_code()
    assert code.n == 4
    assert code.g == 0
    assert code.w == "101010"
    assert code.wp == "01"
    assert code.specials == []


def test_torus_word_lengths():
    m = grid_torus(3, 3)
    code = encode(m, compute_schnyder(m, 0))
    assert code.n == 9
    assert code.g == 1
    assert len(code.w) == 16
    assert len(code.wp) == 16
    assert len(code.specials) == 2


def test_length_identities_scale():
    for m in (planar_random(50, seed=0), grid_torus(5, 4),
              handle_sum(planar_random(30, seed=1), 2, seed=2)):
        n, g = m.n_vertices, m.genus
        code = encode(m, compute_schnyder(m, 0))
        assert len(code.w) == 2 * n - 2
        assert len(code.wp) == 2 * n - 6 + 4 * g
        assert len(code.specials) == 2 * g
        assert code.w.count("1") == n - 1


def test_special_records_are_low_gap_first():
    m = handle_sum(planar_random(35, seed=4), 2, seed=7)
    code = encode(m, compute_schnyder(m, 0))
    for sp in code.specials:
        assert sp.gap_a < sp.gap_b


def test_encode_rejects_wood_for_other_map():
    m1, _ = tetra_code()
    m2 = tetra_map()
    w2 = compute_schnyder(m2, 0)
    with pytest.raises(ValueError):
        encode(m1, w2)


def test_encode_rejects_foreign_wood_without_force():
    m = tetra_map()
    color = [-1, 1, 0, 2, -1, -1]
    out = [-1, 3, 4, 6, -1, -1]
    hand = GSchnyderWood(m, 0, color, out, [])
    with pytest.raises(NotTraversalWood):
        encode(m, hand)
    # this hand labeling is the traversal one, so forcing succeeds
    code = encode(m, hand, force=True)
    assert code.w == "101010"


def test_encode_force_still_checks_tree_size():
    m = tetra_map()
    # recolor so no edge has color 2: the tree cannot span
    hand = GSchnyderWood(m, 0, [-1, 1, 0, 0, -1, -1], [-1, 3, 4, 7, -1, -1], [])
    with pytest.raises(NotTraversalWood):
        encode(m, hand, force=True)


# ------------------------------------------------------------- byte stream


def test_tetra_stream_is_eight_bytes():
    _, code = tetra_code()
    blob = serialize(code)
    assert blob == MAGIC + b"\x04\x00\xa8\x40"
    assert len(blob) == 8


def test_serialize_roundtrip_identity():
    for m in (tetra_map(), grid_torus(3, 3), planar_random(60, seed=5),
              handle_sum(planar_random(25, seed=6), 2, seed=3)):
        code = encode(m, compute_schnyder(m, 0))
        assert deserialize(serialize(code)) == code


def test_deserialize_bad_magic():
    with pytest.raises(BadMagic):
        deserialize(b"GSC2\x04\x00\xa8\x40")


def test_deserialize_short_stream():
    with pytest.raises(TruncatedStream):
        deserialize(b"GS")
    with pytest.raises(TruncatedStream):
        deserialize(MAGIC)
    with pytest.raises(TruncatedStream):
        deserialize(MAGIC + b"\x04")


def test_deserialize_trailing_bytes():
    _, code = tetra_code()
    with pytest.raises(LengthMismatch):
        deserialize(serialize(code) + b"\x00")


def test_deserialize_runaway_varint():
    with pytest.raises(LengthMismatch):
        deserialize(MAGIC + b"\xff" * 12)


def test_deserialize_tiny_vertex_count():
    with pytest.raises(MalformedW):
        deserialize(MAGIC + b"\x02\x00\xff")


def test_deserialize_huge_declared_size_fails_cheaply():
    # a garbage n in the billions must not allocate gigabytes
    blob = MAGIC + b"\x80\x80\x80\x80\x04" + b"\x00" + b"\x00" * 16
    with pytest.raises(TruncatedStream):
        deserialize(blob)


def test_deserialize_nonzero_padding_rejected():
    _, code = tetra_code()
    blob = bytearray(serialize(code))
    blob[-1] |= 0x01  # below the two W' bits
    with pytest.raises(LengthMismatch):
        deserialize(bytes(blob))


def test_deserialize_reserved_flag_bits_rejected():
    m = grid_torus(3, 3)
    code = encode(m, compute_schnyder(m, 0))
    blob = bytearray(serialize(code))
    flag_at = 4 + 2 + (2 * code.n - 2 + 7) // 8 + 4
    assert blob[flag_at] & 0xC0 == 0
    blob[flag_at] |= 0x80
    with pytest.raises(MalformedSpecial):
        deserialize(bytes(blob))


# ------------------------------------------------------------------ decode


def _roundtrip(m):
    w = compute_schnyder(m, 0)
    code = encode(m, w)
    m2, w2 = decode(deserialize(serialize(code)))
    assert maps_isomorphic(m, m2)
    assert w2.validate().passed
    assert woods_equivalent(w, w2)
    assert encode(m2, w2) == code
    return m2, w2


def test_roundtrip_tetra():
    _roundtrip(tetra_map())


def test_roundtrip_planar():
    _roundtrip(planar_random(12, seed=0))
    _roundtrip(planar_random(80, seed=9))
    _roundtrip(planar_stacked(25, seed=1))


def test_roundtrip_torus():
    _roundtrip(grid_torus(3, 3))
    _roundtrip(grid_torus(4, 6))
    _roundtrip(grid_torus(7, 3))


def test_roundtrip_higher_genus():
    _roundtrip(handle_sum(planar_random(30, seed=2), 2, seed=0))
    _roundtrip(handle_sum(grid_torus(4, 4), 1, seed=5))
    _roundtrip(refine(handle_sum(planar_stacked(18, seed=3), 3, seed=1), 1))


def test_roundtrip_after_refine():
    _roundtrip(refine(grid_torus(3, 3), 2))
    _roundtrip(refine(planar_random(10, seed=4), 2))


def test_decoded_wood_claims_traversal_provenance():
    m = grid_torus(3, 3)
    code = encode(m, compute_schnyder(m, 0))
    _, w2 = decode(code)
    assert w2.from_traversal


def test_path_tree_word_is_rejected():
    # a tree whose root has one child would make the root corner a loop
    code = CodeWords(4, 0, "110100", [], "01")
    with pytest.raises(MalformedW):
        decode(code)


def test_malformed_tree_words():
    for w in ("101001", "010101", "111000", "10101"):
        with pytest.raises(MalformedW):
            decode(CodeWords(4, 0, w, [], "01"))
    with pytest.raises(MalformedW):
        decode(CodeWords(4, 0, "101010", [], "011"))
    with pytest.raises(MalformedW):
        decode(CodeWords(3, 0, "1010", [], ""))


def test_wrong_special_count():
    with pytest.raises(MalformedSpecial):
        decode(CodeWords(4, 1, "101010", [], "01"))


def test_special_gap_out_of_range():
    m = grid_torus(3, 3)
    code = encode(m, compute_schnyder(m, 0))
    bad = [SpecialCode(sp.gap_a, sp.rank_a, sp.gap_b, sp.rank_b,
                       sp.color_a, sp.dir_a, sp.color_b, sp.dir_b)
           for sp in code.specials]
    bad[0].gap_a = 2 * code.n - 2
    with pytest.raises(MalformedSpecial):
        decode(CodeWords(code.n, code.g, code.w, bad, code.wp))


def test_special_rank_gap_detected():
    m = grid_torus(3, 3)
    code = encode(m, compute_schnyder(m, 0))
    bad = [SpecialCode(sp.gap_a, sp.rank_a, sp.gap_b, sp.rank_b,
                       sp.color_a, sp.dir_a, sp.color_b, sp.dir_b)
           for sp in code.specials]
    bad[0].rank_a = 1  # sole extremity in its gap cannot have rank 1
    with pytest.raises(MalformedSpecial):
        decode(CodeWords(code.n, code.g, code.w, bad, code.wp))


def test_special_color_three_rejected():
    m = grid_torus(3, 3)
    code = encode(m, compute_schnyder(m, 0))
    bad = [SpecialCode(sp.gap_a, sp.rank_a, sp.gap_b, sp.rank_b,
                       sp.color_a, sp.dir_a, sp.color_b, sp.dir_b)
           for sp in code.specials]
    bad[1].color_b = 3
    with pytest.raises(MalformedSpecial):
        decode(CodeWords(code.n, code.g, code.w, bad, code.wp))


def test_color_word_with_starved_socket():
    _, code = tetra_code()
    with pytest.raises(UnmatchedColor1):
        decode(CodeWords(4, 0, "101010", [], "11"))


def test_color_word_all_zeros_breaks_triangulation():
    _, code = tetra_code()
    with pytest.raises((NonTriangulable, UnmatchedColor1)):
        decode(CodeWords(4, 0, "101010", [], "00"))


def test_genus_zero_decode_is_planar():
    m2, _ = decode(CodeWords(4, 0, "101010", [], "01"))
    assert m2.genus == 0
    assert m2.n_vertices == 4


# -------------------------------------------------------------------- fuzz


def _fuzz_stream(m, blob, rng, trials):
    """Typed error, validator failure, or an honest decode; never a crash."""
    silent_invalid = 0
    for _ in range(trials):
        bad = bytearray(blob)
        pos = rng.randrange(8 * len(blob))
        bad[pos >> 3] ^= 1 << (pos & 7)
        try:
            _, w2 = decode(deserialize(bytes(bad)))
        except GSchnyderError:
            continue
        if not w2.validate().passed:
            silent_invalid += 1
    return silent_invalid


def test_bit_flips_never_crash_or_pass_invalid():
    rng = random.Random(20260814)
    for m in (grid_torus(3, 3), planar_random(25, seed=1),
              handle_sum(planar_random(20, seed=2), 1, seed=0)):
        blob = serialize(encode(m, compute_schnyder(m, 0)))
        assert _fuzz_stream(m, blob, rng, 400) == 0


def test_truncations_raise_typed_errors():
    m = handle_sum(planar_random(22, seed=5), 1, seed=1)
    blob = serialize(encode(m, compute_schnyder(m, 0)))
    for cut in range(len(blob)):
        with pytest.raises(GSchnyderError):
            decode(deserialize(blob[:cut]))


def test_random_garbage_raises_typed_errors():
    rng = random.Random(7)
    for _ in range(500):
        junk = bytes(rng.randrange(256) for _ in range(rng.randrange(80)))
        try:
            decode(deserialize(junk))
        except GSchnyderError:
            pass


def test_garbage_behind_valid_magic_raises_typed_errors():
    rng = random.Random(11)
    for _ in range(500):
        junk = MAGIC + bytes(rng.randrange(256) for _ in range(rng.randrange(76)))
        try:
            decode(deserialize(junk))
        except GSchnyderError:
            pass
