import json

import pytest

from pdhyper.errors import BadPattern, CoverageBroken, InvalidHypergraph, NotSeparated, UnsupportedShape
from pdhyper.hypergraph import (
    CycleShape,
    DisjointStrings,
    Hypergraph,
    OtherShape,
    StringShape,
    classify_shape,
    hypergraph_from_json,
    is_separated,
    load_hypergraph,
    parse_pattern,
    remove_face,
    remove_vertices,
    render_pattern,
)


def H(mu, *faces):
    return Hypergraph.from_faces(mu, faces)


def test_two_closed_vertices_sharing_a_face_is_separated():
    assert is_separated(H(2, [1], [2], [1, 2]))


def test_nested_memberships_are_not_separated():
    # vertex 1 lies only in {1,2}, which 2 also lies in
    assert not is_separated(H(2, [1, 2], [2]))
    assert not is_separated(H(2, [1, 2]))


def test_identical_memberships_are_not_separated():
    assert not is_separated(H(3, [1, 2], [1, 2, 3], [3]))


def test_uncovered_vertex_rejected():
    with pytest.raises(InvalidHypergraph):
        H(3, [1], [2])


def test_face_outside_range_rejected():
    with pytest.raises(InvalidHypergraph):
        H(2, [1], [2, 3])


def test_faces_are_canonical():
    assert H(2, [2, 1], [1], [2]) == H(2, [1], [2], [1, 2])
    assert hash(H(2, [2, 1], [1], [2])) == hash(H(2, [1], [2], [1, 2]))


def test_parse_string_pattern():
    h = parse_pattern("ccoococ")
    assert h.mu == 7
    assert h.closed_vertices() == [1, 2, 5, 7]
    assert (3, 4) in h.faces and (1, 7) not in h.faces


def test_parse_cycle_pattern_adds_closing_face():
    h = parse_pattern("cycle:coco")
    assert (1, 4) in h.faces
    assert isinstance(classify_shape(h), CycleShape)


@pytest.mark.parametrize("bad", ["", "coo", "occ", "cxc", "cycle:co", "cycle:"])
def test_bad_patterns(bad):
    with pytest.raises(BadPattern):
        parse_pattern(bad)


def test_pattern_round_trip():
    for p in ["c", "cc", "ccoococ", "cycle:ooo", "cycle:cocoooocccocooco"]:
        assert render_pattern(parse_pattern(p)) == p


def test_classify_string_orders_from_smallest_endpoint():
    h = H(4, [3], [1], [4], [3, 1], [1, 4], [4, 2], [2])
    shape = classify_shape(h)
    assert isinstance(shape, StringShape)
    assert shape.order == (2, 4, 1, 3)


def test_classify_disjoint_strings():
    h = H(3, [1], [2], [1, 2], [3])
    shape = classify_shape(h)
    assert isinstance(shape, DisjointStrings)
    assert [c.pattern for c in shape.components] == ["cc", "c"]


def test_classify_other_and_empty():
    assert isinstance(classify_shape(H(3, [1, 2, 3], [1], [2], [3])), OtherShape)
    assert classify_shape(Hypergraph.empty()) == DisjointStrings(())
    with pytest.raises(NotSeparated):
        classify_shape(H(2, [1, 2]))


def test_render_rejects_other_shapes():
    with pytest.raises(UnsupportedShape):
        render_pattern(H(3, [1, 2, 3], [1], [2], [3]))


def test_remove_vertices_renumbers_and_closes_neighbours():
    h = parse_pattern("ccoococ")
    assert remove_vertices(h, [1]) == parse_pattern("coococ")
    assert remove_vertices(h, [1, 2, 3, 4]) == parse_pattern("coc")
    assert remove_vertices(h, h.vertices) == Hypergraph.empty()


def test_remove_vertices_from_cycle_gives_string():
    h = parse_pattern("cycle:cooocooo")
    assert render_pattern(remove_vertices(h, [1])) == "coocooc"


def test_remove_face():
    h = parse_pattern("cycle:ccoo")
    assert render_pattern(remove_face(h, (1, 2))) == "cooc"
    cut = remove_face(parse_pattern("coc"), (1, 2))
    with pytest.raises(CoverageBroken):
        remove_face(cut, (2, 3))
    with pytest.raises(InvalidHypergraph):
        remove_face(h, (1, 3))


def test_json_round_trip():
    h = parse_pattern("cycle:coco")
    again = hypergraph_from_json(json.dumps(h.to_json()))
    assert again == h
    assert load_hypergraph(json.dumps(h.to_json())) == h
    assert load_hypergraph("cycle:coco") == h
    with pytest.raises(InvalidHypergraph):
        hypergraph_from_json({"faces": []})
