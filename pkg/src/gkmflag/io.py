"""Serialization of class tables, pairing matrices and reports.

All documents are deterministic: entries are ordered by (length, word) and
JSON is dumped with sorted keys, so identical jobs produce identical bytes.
Scalars are always symbolic (exact rationals attached to exponent data);
nothing is ever rendered through floating point.
"""

from __future__ import annotations

import json
import os
import tempfile

from .model import H, LocalizedClass, flag_space
from .roots import parse_word, word_str
from .scalars import (
    fraction_from_json,
    fraction_to_json,
    render_fraction,
)


def space_to_json(space):
    label = space.rs.type_label
    return {
        "type": label[:-1],
        "rank": space.rs.rank,
        "parabolic": list(space.parabolic.indices),
    }


def space_from_json(doc):
    return flag_space(
        "%s%d" % (doc["type"], doc["rank"]), tuple(doc.get("parabolic", ()))
    )


def _sorted_points(space):
    return space.points  # already ordered by (length, word)


def class_values_json(a):
    return [
        {"label": word_str(v.word), "value": fraction_to_json(a.values[v])}
        for v in _sorted_points(a.space)
    ]


def class_table_document(space, theory, family, side, table, expansions=None):
    """The class-table schema: fixed point restrictions per class, plus the
    Schubert expansion when provided."""
    doc = {
        "space": space_to_json(space),
        "theory": theory,
        "family": family,
        "side": side,
        "y_present": theory == "K",
        "basis": "fixedpoint",
        "entries": [],
    }
    for w in _sorted_points(space):
        entry = {
            "label": word_str(w.word),
            "values": class_values_json(table[w]),
        }
        if expansions is not None:
            exp = expansions[w]
            entry["expansion"] = {
                "basis": "schubert",
                "side": exp.side,
                "coeffs": [
                    {"label": word_str(u.word), "coeff": fraction_to_json(c)}
                    for u, c in sorted(
                        exp.nonzero().items(), key=lambda kv: (kv[0].length, kv[0].word)
                    )
                ],
            }
        doc["entries"].append(entry)
    return doc


def load_class_table(doc):
    """Re-ingest a class-table document into localized classes."""
    space = space_from_json(doc["space"])
    theory = doc["theory"]
    rank = space.rs.rank
    out = {}
    for entry in doc["entries"]:
        vals = {}
        for item in entry["values"]:
            v = space.rep(space.rs.from_word(parse_word(item["label"])))
            vals[v] = fraction_from_json(item["value"], theory, rank)
        out[entry["label"]] = LocalizedClass(space, theory, vals)
    return space, theory, out


def matrix_document(space, theory, rows, cols, matrix):
    return {
        "space": space_to_json(space),
        "theory": theory,
        "rows": [word_str(w.word) for w in rows],
        "cols": [word_str(w.word) for w in cols],
        "matrix": [[fraction_to_json(c) for c in row] for row in matrix],
    }


# ---------------------------------------------------------------------------
# text renderers
# ---------------------------------------------------------------------------

def latex_scalar(s):
    from .scalars import CohScalar

    if s.is_zero():
        return "0"
    parts = []
    coh = isinstance(s, CohScalar)
    for k, c in s.sorted_terms():
        if coh:
            factors = []
            for j in range(s.rank):
                if k[j] == 1:
                    factors.append(r"\alpha_{%d}" % (j + 1))
                elif k[j]:
                    factors.append(r"\alpha_{%d}^{%d}" % (j + 1, k[j]))
            if k[s.rank] == 1:
                factors.append(r"\hbar")
            elif k[s.rank]:
                factors.append(r"\hbar^{%d}" % k[s.rank])
            body = " ".join(factors)
        else:
            factors = []
            lat, ye = k[:-1], k[-1]
            if any(lat):
                exps = []
                for j, a in enumerate(lat):
                    if a == 1:
                        exps.append(r"+\alpha_{%d}" % (j + 1))
                    elif a == -1:
                        exps.append(r"-\alpha_{%d}" % (j + 1))
                    elif a:
                        exps.append(r"%+d\alpha_{%d}" % (a, j + 1))
                factors.append("e^{%s}" % "".join(exps).lstrip("+"))
            if ye == 1:
                factors.append("y")
            elif ye:
                factors.append("y^{%d}" % ye)
            body = " ".join(factors)
        mag = abs(c)
        if body:
            txt = body if mag == 1 else "%s %s" % (_latex_rat(mag), body)
        else:
            txt = _latex_rat(mag)
        if not parts:
            parts.append(("-" if c < 0 else "") + txt)
        else:
            parts.append((" - " if c < 0 else " + ") + txt)
    return "".join(parts)


def _latex_rat(q):
    if getattr(q, "denominator", 1) != 1:
        return r"\tfrac{%d}{%d}" % (q.numerator, q.denominator)
    return str(int(q))


def latex_fraction(f):
    if f.is_polynomial():
        return latex_scalar(f.num)
    return r"\frac{%s}{%s}" % (latex_scalar(f.num), latex_scalar(f.den))


def table_to_csv(doc):
    lines = ["class,point,value"]
    for entry in doc["entries"]:
        space = space_from_json(doc["space"])
        for item in entry["values"]:
            frac = fraction_from_json(item["value"], doc["theory"], space.rs.rank)
            lines.append(
                '%s,%s,"%s"' % (entry["label"], item["label"], render_fraction(frac))
            )
    return "\n".join(lines) + "\n"


def table_to_latex(doc):
    space = space_from_json(doc["space"])
    rank = space.rs.rank
    out = [r"\begin{tabular}{lll}", r"class & point & value \\ \hline"]
    for entry in doc["entries"]:
        for item in entry["values"]:
            frac = fraction_from_json(item["value"], doc["theory"], rank)
            out.append(
                r"$%s$ & $%s$ & $%s$ \\"
                % (entry["label"], item["label"], latex_fraction(frac))
            )
    out.append(r"\end{tabular}")
    return "\n".join(out) + "\n"


def matrix_to_csv(doc):
    space = space_from_json(doc["space"])
    rank = space.rs.rank
    lines = ["row,col,value"]
    for rl, row in zip(doc["rows"], doc["matrix"]):
        for cl, item in zip(doc["cols"], row):
            frac = fraction_from_json(item, doc["theory"], rank)
            lines.append('%s,%s,"%s"' % (rl, cl, render_fraction(frac)))
    return "\n".join(lines) + "\n"


def matrix_to_latex(doc):
    space = space_from_json(doc["space"])
    rank = space.rs.rank
    ncols = len(doc["cols"])
    out = [r"\begin{tabular}{l%s}" % ("l" * ncols)]
    out.append(" & ".join([""] + ["$%s$" % c for c in doc["cols"]]) + r" \\ \hline")
    for rl, row in zip(doc["rows"], doc["matrix"]):
        cells = [
            "$%s$" % latex_fraction(fraction_from_json(item, doc["theory"], rank))
            for item in row
        ]
        out.append(" & ".join(["$%s$" % rl] + cells) + r" \\")
    out.append(r"\end{tabular}")
    return "\n".join(out) + "\n"


def dumps_json(doc):
    return json.dumps(doc, indent=1, sort_keys=True) + "\n"


def write_atomic(path, text):
    """Write the output file in one atomic rename."""
    d = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=d, prefix=".gkmflag-")
    try:
        with os.fdopen(fd, "w") as f:
            f.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
