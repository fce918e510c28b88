"""Independent sympy computation of expected series coefficients.

Writes tests/data/oracles.json. Each element is a list of
[exponent vector over `gens`, "rational"] pairs, one list per power of hbar,
reduced modulo a Groebner basis of the ring's ideal. The C++ tests rebuild the
elements from generators, so no basis or label convention is shared.

Run: python3 tests/oracles/generate.py
"""

import itertools
import json
import pathlib

import sympy as sp


class Ring:
    def __init__(self, gens, ideal):
        self.gens = gens
        self.G = sp.groebner(ideal, *gens, order="grevlex", domain=sp.QQ) if ideal else None

    def reduce(self, f):
        f = sp.expand(f)
        if self.G is None or f == 0:
            return f
        return self.G.reduce(f)[1]

    def mul(self, a, b):
        out = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                v = self.reduce(out.get(ea + eb, 0) + ca * cb)
                out[ea + eb] = v
        return {e: c for e, c in out.items() if c != 0}

    def inv_linear(self, x, m, terms):
        # 1/(x + m hbar) = sum_j (-x)^j m^(-j-1) hbar^(-j-1), x nilpotent modulo the ideal
        out = {}
        xp = sp.Integer(1)
        for j in range(terms):
            c = self.reduce(xp * sp.Rational((-1) ** j, m ** (j + 1)))
            if c != 0:
                out[-j - 1] = c
            xp = self.reduce(xp * x)
        return out

    def ratio(self, x, s, terms):
        one = {0: sp.Integer(1)}
        if s > 0:
            r = one
            for m in range(1, s + 1):
                r = self.mul(r, self.inv_linear(x, m, terms))
            return r
        r = one
        for m in range(s + 1, 1):
            r = self.mul(r, {0: x, 1: sp.Integer(m)} if m != 0 else {0: x})
        return r

    def export(self, series):
        out = {}
        for e, c in sorted(series.items()):
            poly = sp.Poly(c, *self.gens)
            out[str(e)] = [[list(mon), str(coef)] for mon, coef in sorted(poly.terms())]
        return out


def bundle_oracle(name, base_gens, base_ideal, rays, ray_pairing, bundles, box):
    """rays: divisor classes as expressions; ray_pairing(rho, d) = D_rho . beta;
    bundles: (class, pairing(d)) for L_1..L_n."""
    z = sp.Symbol("z")
    gens = list(base_gens) + [z]
    rel = z
    for c, _ in bundles:
        rel *= z - c
    ring = Ring(gens, list(base_ideal) + [sp.expand(rel)])
    terms = len(gens) + 4 + len(bundles)
    nu_max, d_max = box
    entries = []
    for nu in range(nu_max + 1):
        for d in itertools.product(*[range(k + 1) for k in d_max]):
            coeff = {0: sp.Integer(1)}
            coeff = ring.mul(coeff, ring.ratio(z, nu, terms))
            for c, pairing in bundles:
                coeff = ring.mul(coeff, ring.ratio(z - c, nu - pairing(d), terms))
            for rho, D in enumerate(rays):
                coeff = ring.mul(coeff, ring.ratio(D, ray_pairing(rho, d), terms))
            entries.append({"class": "(%d; %s)" % (nu, ",".join(map(str, d))), "coeff": ring.export(coeff)})
    return {"geometry": name, "gens": [str(g) for g in gens], "classes": entries}


def equivariant_oracle(n, precision, order):
    H = sp.Symbol("H")
    lam = sp.symbols("l0:%d" % (n + 1))
    gens = [H] + list(lam)
    rel = sp.Integer(1)
    for l in lam:
        rel *= H - l
    ideal = [sp.expand(rel)]
    for exps in itertools.product(range(precision + 2), repeat=n + 1):
        if sum(exps) == precision + 1:
            ideal.append(sp.Mul(*[l**e for l, e in zip(lam, exps)]))
    ring = Ring(gens, ideal)
    terms = n + precision + 2
    coeffs = []
    for nu in range(order + 1):
        c = {0: sp.Integer(1)}
        for l in lam:
            c = ring.mul(c, ring.ratio(H - l, nu, terms))
        coeffs.append(ring.export(c))
    return {"n": n, "precision": precision, "gens": [str(g) for g in gens], "coeffs": coeffs}


def main():
    p, H, a, b = sp.symbols("p H a b")
    out = {
        "bundle_series": [
            bundle_oracle("F0", [p], [p**2], [p, p], lambda r, d: d[0], [(0 * p, lambda d: 0)], (2, [2])),
            bundle_oracle("F1", [p], [p**2], [p, p], lambda r, d: d[0], [(p, lambda d: d[0])], (2, [2])),
            bundle_oracle("F2", [p], [p**2], [p, p], lambda r, d: d[0], [(2 * p, lambda d: 2 * d[0])], (1, [2])),
            bundle_oracle("P2_O_O1", [H], [H**3], [H, H, H], lambda r, d: d[0], [(H, lambda d: d[0])], (2, [1])),
            bundle_oracle("P1xP1_O_O11", [a, b], [a**2, b**2], [a, a, b, b],
                          lambda r, d: d[0] if r < 2 else d[1], [(a + b, lambda d: d[0] + d[1])], (1, [1, 1])),
        ],
        "equivariant": [
            equivariant_oracle(1, 2, 3),
            equivariant_oracle(2, 3, 2),
        ],
    }
    path = pathlib.Path(__file__).resolve().parent.parent / "data" / "oracles.json"
    path.write_text(json.dumps(out, indent=1, sort_keys=True) + "\n")


if __name__ == "__main__":
    main()
