import pytest

from kummercodes import Polynomial, make_curve, make_field, mth_roots
from kummercodes.curve import ConfigError, load_curve, parse_curve_config
from kummercodes.rr import Divisor


def test_reference_curve_parameters(curve_y3_x5x, curve_y9_quartic, curve_y6_x5x):
    assert (curve_y3_x5x.r, curve_y3_x5x.genus) == (5, 4)
    assert (curve_y9_quartic.r, curve_y9_quartic.genus) == (4, 12)
    assert (curve_y6_x5x.r, curve_y6_x5x.genus) == (5, 10)
    assert len(curve_y3_x5x.alphas) == 5
    assert [a.enc for a in curve_y9_quartic.alphas][0] == 0


def test_lambda_normalized(f25):
    f = Polynomial.parse(f25, "0,4,0,0,0,1")
    c = make_curve(f25, 3, 4, f)  # 4 = 1 mod 3
    assert c.lam == 1


def test_make_curve_rejects_bad_data(f25):
    f = Polynomial.parse(f25, "0,4,0,0,0,1")
    with pytest.raises(ValueError):
        make_curve(f25, 5, 1, f)  # p | m
    with pytest.raises(ValueError):
        make_curve(f25, 1, 1, f)  # m < 2
    with pytest.raises(ValueError):
        make_curve(f25, 3, 0, f)  # lambda < 1
    with pytest.raises(ValueError):
        make_curve(f25, 3, 3, f)  # lambda = 0 mod m -> gcd failure
    with pytest.raises(ValueError):
        make_curve(f25, 3, 1, Polynomial.from_roots(f25, range(6)))  # gcd(3, 6) > 1
    x = Polynomial.x(f25)
    with pytest.raises(ValueError):
        make_curve(f25, 3, 1, x * x)  # not separable
    with pytest.raises(ValueError):
        make_curve(f25, 2, 1, x)  # degree 1: genus 0, rejected as degenerate


@pytest.mark.parametrize(
    "fixture,count",
    [("curve_y3_x5x", 66), ("curve_y9_quartic", 257), ("curve_y6_x5x", 126)],
)
def test_rational_place_counts(fixture, count, request):
    curve = request.getfixturevalue(fixture)
    assert len(curve.rational_places()) == count


def test_place_ordering_and_kinds(curve_y3_x5x):
    places = curve_y3_x5x.rational_places()
    assert places[0].kind == "infinity"
    ram = [p for p in places if p.kind == "ramified"]
    assert [p.index for p in ram] == [1, 2, 3, 4, 5]
    assert [p.alpha.enc for p in ram] == sorted(p.alpha.enc for p in ram)
    ordinary = [p for p in places if p.kind == "ordinary"]
    keys = [(p.x.enc, p.y.enc) for p in ordinary]
    assert keys == sorted(keys)
    # construction is cached and deterministic
    assert curve_y3_x5x.rational_places() is places


def test_ordinary_places_satisfy_equation(curve_y6_x5x):
    c = curve_y6_x5x
    for p in c.rational_places():
        if p.kind == "ordinary":
            assert p.y ** c.m == c.f(p.x) ** c.lam
            assert not c.f(p.x).is_zero()


def test_place_census_against_root_scan(curve_y3_x5x):
    """1 + #{rational roots of f} + sum over non-roots of #(m-th roots)."""
    c = curve_y3_x5x
    expected = 1 + len(c.alphas)
    for a in c.field.elements():
        fa = c.f(a)
        if not fa.is_zero():
            expected += len(mth_roots(fa ** c.lam, c.m))
    assert len(c.rational_places()) == expected


def test_ramified_place_accessors(curve_y3_x5x):
    p1 = curve_y3_x5x.ramified_place(1)
    assert p1.kind == "ramified" and p1.alpha.enc == 0
    with pytest.raises(ValueError):
        curve_y3_x5x.ramified_place(6)
    assert curve_y3_x5x.place_infinity().label() == "P_inf"
    assert p1.label() == "P_1"


def test_principal_divisors(curve_y3_x5x):
    c = curve_y3_x5x
    pd = c.principal_divisors()
    for div in [pd.y, pd.f, pd.z, *pd.x_minus_alpha.values()]:
        assert div.degree == 0
    assert pd.x_minus_alpha[1] == Divisor(-3, {1: 3})
    assert pd.y == Divisor(-5, {i: 1 for i in range(1, 6)})
    assert pd.f == Divisor(-15, {i: 3 for i in range(1, 6)})
    # z = f^a / y^b realizes the pole divisor r*P_inf
    assert pd.z_num_pow == 1 and pd.z_den_pow == 2  # lambda = 1, b = m - 1
    assert pd.z == Divisor(-5, {i: 1 for i in range(1, 6)})
    assert pd.z_num_pow * pd.f + (-pd.z_den_pow) * pd.y == pd.z


def test_principal_divisors_general_lambda():
    f7 = make_field(7)
    c = make_curve(f7, 5, 2, Polynomial.from_roots(f7, [0, 1, 2]))
    pd = c.principal_divisors()
    assert pd.z_num_pow * c.m - pd.z_den_pow * c.lam == 1
    assert pd.z_num_pow * pd.f + (-pd.z_den_pow) * pd.y == pd.z
    assert pd.z.coeff_inf == -c.r


def test_curve_with_no_rational_branch_points(f25):
    # f irreducible over F_5 (roots live upstairs); the curve is still fine
    f5 = make_field(5)
    f = Polynomial(f5, [2, 0, 1])  # x^2 + 2
    c = make_curve(f5, 3, 1, f)
    assert c.alphas == ()
    places = c.rational_places()
    # x -> x^3 is a bijection on F_5, so each nonzero value has one cube root
    assert len(places) == 1 + 0 + 5


def test_config_roundtrip(tmp_path):
    text = "\n".join([
        "# reference curve",
        "p = 5",
        "e = 2",
        "m = 3",
        "lambda = 1",
        "f = 0,4,0,0,0,1",
    ])
    cfg = parse_curve_config(text)
    assert cfg == {"p": 5, "e": 2, "m": 3, "lambda": 1, "f": [0, 4, 0, 0, 0, 1]}
    path = tmp_path / "curve.cfg"
    path.write_text(text + "\n", encoding="utf-8")
    c = load_curve(path)
    assert (c.m, c.lam, c.genus) == (3, 1, 4)


@pytest.mark.parametrize(
    "text,line",
    [
        ("p = 5\nbogus\n", 2),
        ("p = 5\ne = 2\nwidth = 3\n", 3),
        ("p = 5\np = 7\n", 2),
        ("p = five\n", 1),
        ("p = 5\ne = 1\nm = 3\nlambda = 1\nf = 0,a,1\n", 5),
    ],
)
def test_config_errors_cite_lines(text, line):
    with pytest.raises(ConfigError) as err:
        parse_curve_config(text)
    assert f"line {line}" in str(err.value)


def test_config_missing_keys_and_bad_encodings():
    with pytest.raises(ConfigError, match="missing"):
        parse_curve_config("p = 5\ne = 2\n")
    from kummercodes.curve import curve_from_config

    with pytest.raises(ConfigError, match="encodings"):
        curve_from_config({"p": 5, "e": 1, "m": 3, "lambda": 1, "f": [0, 9, 1]})


def test_curve_hashable(curve_y3_x5x, f25):
    same = make_curve(f25, 3, 1, Polynomial.parse(f25, "0,4,0,0,0,1"))
    assert same == curve_y3_x5x
    assert hash(same) == hash(curve_y3_x5x)
    assert len({same, curve_y3_x5x}) == 1
