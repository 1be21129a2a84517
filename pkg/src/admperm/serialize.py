"""JSON forms of elements and certificates, and an independent recheck.

An extended affine element is ``{"lambda": [...], "word": [...]}`` meaning
t_lambda * s_{word[0]} * s_{word[1]} * ...  All rationals are "p/q" strings.

:func:`recheck_certificate` validates a certificate using only the simple
reflection formulas on vectors, without building permutation
representations or group tables.
"""

from __future__ import annotations

from fractions import Fraction

from . import qq
from .affine_weyl import ExtAffElt
from .finite_weyl import from_word
from .kr_sets import haines_necessary, helam_pair, is_admissible_direct, is_permissible
from .qq import Vec
from .rootdata import RootDatum, alcove_vertices, reflect


def elt_to_json(x: ExtAffElt) -> dict:
    return {"lambda": qq.fmt_vec(x.lam), "word": list(x.w.reduced_word())}


def elt_from_json(datum: RootDatum, doc: dict) -> ExtAffElt:
    from .affine_weyl import aff_make

    try:
        lam = qq.parse_vec(doc["lambda"])
        word = [int(i) for i in doc.get("word", [])]
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"malformed element: {exc}") from exc
    return aff_make(datum, lam, from_word(datum, word))


def certificate(datum: RootDatum, mu: Vec, x: ExtAffElt, case: str | None = None) -> dict:
    ok, perm = is_permissible(datum, mu, x)
    doc = {"case": case, "type": datum.type_label, "mu": qq.fmt_vec(mu), "element": elt_to_json(x)}
    if ok:
        doc["permissible"] = {
            "verdict": True,
            "lattice_coeffs": list(perm.lattice_coeffs),
            "vertices": {
                str(i): cert.to_json() for i, (_, _, cert) in enumerate(perm.vertices, start=1)
            },
        }
    else:
        doc["permissible"] = {"verdict": False, "reason": perm}
    try:
        pair = helam_pair(datum, mu, x)
    except ValueError as exc:
        doc["admissible"] = {"verdict": is_admissible_direct(datum, mu, x), "reason": str(exc), "method": "direct search"}
    else:
        doc["admissible"] = {
            "z1_word": list(pair.z1.reduced_word()),
            "z2_word": list(pair.z2.reduced_word()),
            "verdict": pair.admissible,
            "trace": [[i, hit] for i, hit in pair.trace],
        }
    doc["haines"] = {"verdict": haines_necessary(datum, mu, x)}
    return doc


# -- recheck ----------------------------------------------------------------

def _apply_word(datum: RootDatum, word, v: Vec) -> Vec:
    for i in reversed(word):
        v = reflect(datum, i, v)
    return v


def _reflect_char(datum: RootDatum, i: int, a: Vec) -> Vec:
    av = datum.simple_coroots[i - 1]
    c = qq.dot(a, av)
    return qq.sub(a, qq.scale(c, datum.simple_roots[i - 1])) if c else a


def _is_negative_root(datum: RootDatum, a: Vec) -> bool:
    return sum(qq.dot(a, rho) for rho in datum.fundamental_coweights) < 0


def _inverse_image_negative(datum: RootDatum, word, i: int) -> bool:
    """Is w^-1(alpha_i) negative, w = s_word?"""
    a = datum.simple_roots[i - 1]
    for j in word:
        a = _reflect_char(datum, j, a)
    return _is_negative_root(datum, a)


def _same_linear_map(datum: RootDatum, w1, w2) -> bool:
    return all(_apply_word(datum, w1, v) == _apply_word(datum, w2, v) for v in datum.simple_coroots)


def recheck_certificate(datum: RootDatum, doc: dict) -> list:
    """Return a list of problems (empty when the certificate checks out)."""
    problems = []
    mu = qq.parse_vec(doc["mu"])
    lam = qq.parse_vec(doc["element"]["lambda"])
    word = [int(i) for i in doc["element"]["word"]]

    perm = doc.get("permissible", {})
    if perm.get("verdict"):
        coeffs = [Fraction(c) for c in perm["lattice_coeffs"]]
        if any(c.denominator != 1 for c in coeffs) or qq.combo(coeffs, datum.simple_coroots) != qq.sub(lam, mu):
            problems.append("condition (i) coefficients do not reproduce x(0) - mu")
        verts = alcove_vertices(datum)
        if sorted(perm["vertices"], key=int) != [str(i) for i in range(1, len(verts) + 1)]:
            problems.append("permissibility certificate does not cover every vertex")
        for key, entry in perm["vertices"].items():
            a = verts[int(key) - 1]
            v = qq.parse_vec(entry["vector"])
            if qq.add(_apply_word(datum, word, a), qq.sub(lam, a)) != v:
                problems.append(f"vertex {key}: stored vector is not x(a) - a")
            v_plus = qq.parse_vec(entry["dominant_rep"])
            if _apply_word(datum, entry["word"], v) != v_plus:
                problems.append(f"vertex {key}: dominant representative does not match its word")
            if any(qq.dot(s, v_plus) < 0 for s in datum.simple_roots):
                problems.append(f"vertex {key}: representative is not dominant")
            c = qq.parse_vec(entry["coefficients"])
            if any(x < 0 for x in c) or qq.combo(c, datum.simple_coroots) != qq.sub(mu, v_plus):
                problems.append(f"vertex {key}: dominance coefficients invalid")

    adm = doc.get("admissible", {})
    if "z1_word" in adm:
        z1, z2 = adm["z1_word"], adm["z2_word"]
        if _apply_word(datum, z2, mu) != lam:
            problems.append("z2(mu) differs from the translation part")
        z1_inv = list(reversed(z1))
        if not _same_linear_map(datum, list(z2) + z1_inv, word):
            problems.append("z2 z1^-1 differs from the finite part")
        stab = [i for i, s in enumerate(datum.simple_roots, start=1) if qq.dot(s, mu) == 0]
        for i in stab:
            a = datum.simple_roots[i - 1]
            for j in reversed(z1):
                a = _reflect_char(datum, j, a)
            if _is_negative_root(datum, a):
                problems.append(f"z1 has right descent s_{i} in I(mu); not a minimal representative")
        cur = list(z2)
        if [i for i, _ in adm["trace"]] != [int(i) for i in z1]:
            problems.append("trace letters differ from the z1 word")
        for i, hit in adm["trace"]:
            if _inverse_image_negative(datum, cur, i) != bool(hit):
                problems.append(f"trace step s_{i} recorded incorrectly")
                break
            if hit:
                cur = [i] + cur
        rho = qq.combo([1] * datum.rank, datum.fundamental_coweights)
        residue_trivial = _apply_word(datum, cur, rho) == rho
        if residue_trivial != bool(adm["verdict"]):
            problems.append("admissibility verdict disagrees with the replayed trace")

    if "haines" in doc:
        x = ExtAffElt(lam, from_word(datum, word))
        if haines_necessary(datum, mu, x) != doc["haines"]["verdict"]:
            problems.append("Haines verdict does not reproduce")
    return problems
