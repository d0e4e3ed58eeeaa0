import math

import pytest

from strongcompat import bitset
from strongcompat.algebra import cyclic_group, dimension, is_free
from strongcompat.complexes import crosspolytope_boundary, face_poset, is_free_complex_action, make_complex
from strongcompat.errors import InvalidParameter, ValidationError


@pytest.mark.parametrize("n", [0, 1, 2, 3, 4])
def test_crosspolytope_f_vector(n):
    K = crosspolytope_boundary(n)
    d = n + 1
    assert K.vertex_count == 2 * d
    assert len(K.faces) == 3**d - 1
    for k in range(1, d + 1):
        assert sum(1 for f in K.faces if f.bit_count() == k) == 2**k * math.comb(d, k)
    assert K.dimension == n
    assert is_free_complex_action(K)
    # no face contains a vertex and its antipode
    assert all(not (f >> v & 1 and f >> (v + d) & 1) for f in K.faces for v in range(d))


def test_faces_are_sorted_by_size_then_vertices():
    K = make_complex([[0, 1, 2], [2, 3]])
    keys = [(f.bit_count(), bitset.indices(f)) for f in K.faces]
    assert keys == sorted(keys)
    assert sorted(map(bitset.indices, K.facets)) == [[0, 1, 2], [2, 3]]


def test_face_poset_of_triangle():
    K = make_complex([[0, 1, 2]])
    P = face_poset(K)
    assert P.size == 7 and P.group.order == 1
    assert dimension(P) == 2
    top = K.face_index()[0b111]
    assert P.down[top].bit_count() == 6
    assert P.labels[top] == (0, 1, 2)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_face_poset_of_sphere_is_free(n):
    P = face_poset(crosspolytope_boundary(n))
    assert is_free(P) and dimension(P) == n
    for i, j in P.less_pairs():
        fi, fj = P.labels[i], P.labels[j]
        assert set(fi) < set(fj)


def test_complex_action_validation():
    with pytest.raises(ValidationError, match="non-face"):
        make_complex([[0, 1], [2]], action=[[0, 1, 2], [0, 2, 1]])
    with pytest.raises(ValidationError, match="permutation"):
        make_complex([[0, 1]], action=[[0, 1], [0, 0]])
    with pytest.raises(ValidationError):
        make_complex([[0], [1], [2]], action=[[0, 1, 2], [1, 2, 0]], group=cyclic_group(2))
    with pytest.raises(InvalidParameter):
        make_complex([])
    with pytest.raises(InvalidParameter):
        make_complex([[]])
    with pytest.raises(InvalidParameter):
        is_free_complex_action(make_complex([[0, 1]]))


def test_non_free_complex_action():
    # swapping the endpoints of an edge fixes the edge itself
    K = make_complex([[0, 1]], action=[[0, 1], [1, 0]])
    assert not is_free_complex_action(K)
    assert not is_free(face_poset(K))
