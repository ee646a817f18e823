from fractions import Fraction

import pytest

from skein.cobordism import generator, tensor
from skein.errors import UnreducedGenus
from skein.functor import (MINUS, OCOB, PLUS, SUCOB, WREATH, component_images, f_image_diagram,
                           f_image_xi, image_vectors, poly_rank, rank_of_images, target_hom_dim)
from skein.scalar import ONE, ZERO, Poly
from skein.spanning import MarkClass, mark_classes, spanning_S, spanning_T, theta_m, xi, xi_family
from skein.wreath import StHomElement, st_hom_dim

s = Poly.var("s")
lam = Poly.var("lambda")


def _only(f):
    (d,) = f.terms
    return d


def test_f_image_xi_examples():
    assert f_image_xi(1, ()) == StHomElement(1, {(((1,),), ((),)): 1})
    assert f_image_xi(2, (2,)) == f_image_xi(2, (1,))
    assert f_image_xi(2, (2,)) != f_image_xi(2, ())


def test_xi_images_span():
    assert rank_of_images(xi_family(3), OCOB) == 4
    assert rank_of_images(xi_family(4), OCOB) == 8


def test_component_images_examples():
    th = _only(theta_m(1, 1)).components[0]
    assert component_images(th) == (ZERO, s, -s)
    th2 = _only(theta_m(1, 2)).components[0]
    assert component_images(th2) == (ZERO, lam, lam)
    u = _only(generator("u")).components[0]
    assert component_images(u) == (ONE, ONE, ONE)


def test_triple_image_of_u_is_pure():
    img = f_image_diagram(_only(generator("u")))
    for which in (WREATH, PLUS, MINUS):
        assert img.part(which)
    assert len(img.terms) == 3


def test_mixed_summands_from_separate_pieces():
    img = f_image_diagram(_only(tensor(generator("u"), generator("theta"))))
    assert ((WREATH, PLUS), ((1,),), ((),), ((2,),), ()) in img.terms
    assert not img.part(WREATH)


def test_theta_dies_in_wreath_part():
    for f in spanning_T(2):
        d = _only(f)
        if d.has_crosscaps():
            assert f_image_diagram(d, OCOB) == StHomElement(2)


def test_genus_must_be_reduced():
    with pytest.raises(UnreducedGenus):
        f_image_diagram(_only(xi(2, (), genus=1)))


def test_ranks():
    for m in (1, 2, 3, 4):
        assert rank_of_images(spanning_S(m), OCOB) == st_hom_dim(m)
    assert rank_of_images(spanning_T(1), SUCOB) == 3
    assert rank_of_images(spanning_T(2), SUCOB) == 13
    assert rank_of_images(spanning_T(3), SUCOB, point={"s": Fraction(3, 7)}) == 69


def test_target_dims():
    assert [target_hom_dim(m) for m in (1, 2, 3)] == [3, 13, 69]
    assert target_hom_dim(0) == 1


def test_complement_classes_same_image():
    for m in range(1, 5):
        for c in mark_classes(m):
            assert f_image_xi(m, c.rep) == f_image_xi(m, c.complement())
            assert MarkClass(m, c.complement()) == c


def test_poly_rank():
    assert poly_rank([[s, lam], [ONE, s]]) == 1
    assert poly_rank([[s, ONE], [ONE, s]]) == 2
    assert poly_rank([]) == 0
    assert poly_rank(image_vectors(spanning_T(1), SUCOB)) == 3
