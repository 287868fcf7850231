"""JSON and TSV codecs.

Rationals cross the wire as exact "p/q" strings (never floats); every emitter
sorts its keys so repeated runs produce byte-identical output.
"""

from __future__ import annotations

from fractions import Fraction

from .anomaly import GradedPoly, ZFunction
from .gvtransform import InvariantTable
from .laurent import LaurentPoly
from .qseries import QSeries


def frac_str(x):
    return str(Fraction(x))


def coeff_to_json(c):
    """A series coefficient: Fraction -> "p/q"; LaurentPoly -> sorted term list."""
    if isinstance(c, LaurentPoly):
        return [
            {"exps": list(exps), "coeff": frac_str(c.terms[exps])}
            for exps in sorted(c.terms)
        ]
    return frac_str(c)


def coeff_from_json(v):
    if isinstance(v, list):
        nvars = len(v[0]["exps"]) if v else 1
        return LaurentPoly(
            {tuple(t["exps"]): Fraction(t["coeff"]) for t in v}, nvars
        )
    return Fraction(v)


def series_to_json(s):
    return {
        "var": s.var,
        "order": s.order,
        "coeffs": [coeff_to_json(c) for c in s.coeffs],
    }


def series_from_json(d):
    coeffs = [coeff_from_json(v) for v in d["coeffs"]]
    return QSeries(coeffs, d["order"], d["var"])


def series_to_tsv(s):
    """One row per power: power <TAB> coefficient."""
    lines = []
    for i, c in enumerate(s.coeffs):
        text = repr(c) if isinstance(c, LaurentPoly) else frac_str(c)
        lines.append(f"{i}\t{text}")
    return "\n".join(lines) + "\n"


def table_to_json(t):
    entries = [
        {"genus": g, "class": list(cls), "value": frac_str(t.entries[(g, cls)])}
        for g, cls in sorted(t.entries)
    ]
    return {
        "rank": t.rank,
        "degree_weights": list(t.degree_weights),
        "kind": t.kind,
        "max_genus": t.max_genus,
        "max_degree": t.max_degree,
        "entries": entries,
    }


def table_from_json(d):
    entries = {
        (e["genus"], tuple(e["class"])): Fraction(e["value"]) for e in d["entries"]
    }
    return InvariantTable(
        d["kind"],
        d["rank"],
        tuple(d["degree_weights"]),
        d["max_genus"],
        d["max_degree"],
        entries,
    )


def poly_to_json(p):
    return {
        "weight": p.weight,
        "monomials": [
            {"e2": a, "e4": b, "e6": c, "coeff": frac_str(p.monomials[(a, b, c)])}
            for a, b, c in sorted(p.monomials)
        ],
    }


def poly_from_json(d):
    return GradedPoly(
        d["weight"],
        {
            (m["e2"], m["e4"], m["e6"]): Fraction(m["coeff"])
            for m in d["monomials"]
        },
    )


def zfunctions_to_json(zfs):
    return [
        {"n": z.n, "g": z.g, "poly": poly_to_json(z.poly)}
        for z in sorted(zfs, key=lambda z: (z.n, z.g))
    ]


def zfunctions_from_json(items):
    return [ZFunction(d["n"], d["g"], poly_from_json(d["poly"])) for d in items]


def spin_str(two_j):
    """Spin label for a doubled weight: 0 -> "0", 1 -> "1/2", 2 -> "1", ..."""
    return str(Fraction(two_j, 2))


def decomposition_to_json(layers):
    """{h: {2j: mult}} -> {"I_basis": {"h": {"j": mult}}} with spins in
    lowest terms."""
    return {
        "I_basis": {
            str(h): {spin_str(two_j): m for two_j, m in sorted(spins.items())}
            for h, spins in sorted(layers.items())
        }
    }
