"""Classification reports: one record per analyzed group, three renderings.

Reports serialize losslessly to JSON (schema version 1) and render as an
aligned human table or a CSV row.  Structure strings follow a fixed
grammar so catalogs stay greppable: `Zn` is a cyclic factor, `x` a direct
product, `:` a semidirect product with the acting group on the right,
e.g. `(Z9 x Z3) : Z3`.
"""

from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import asdict, dataclass
from typing import Optional

from .abelian import two_gen_decomposition
from .delta6 import delta6_image_obstruction
from .engine import GroupFingerprint
from .series_c import build_c_group, classify_c_group, tn_prime_condition
from .series_d import build_d_group, classify_d_group

SCHEMA_VERSION = 1

_CSV_COLUMNS = (
    "kind", "n", "a", "b", "d", "r", "s",
    "order", "structure", "verdict",
    "tn_flag", "z3_split", "s3_split", "delta6_obstruction",
)


@dataclass
class ClassificationReport:
    """Everything the CLI emits for one group, in plain-data form."""

    kind: str
    params: dict[str, int]
    structure: dict
    structure_str: str
    fingerprint: dict
    flags: dict
    timing_s: float
    schema: int = SCHEMA_VERSION

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict) -> "ClassificationReport":
        return cls(
            kind=data["kind"],
            params=dict(data["params"]),
            structure=dict(data["structure"]),
            structure_str=data["structure_str"],
            fingerprint=dict(data["fingerprint"]),
            flags=dict(data["flags"]),
            timing_s=data["timing_s"],
            schema=data["schema"],
        )

    @classmethod
    def from_json(cls, text: str) -> "ClassificationReport":
        return cls.from_dict(json.loads(text))


def fingerprint_to_dict(fp: GroupFingerprint) -> dict:
    return {
        "order": fp.order,
        "element_order_histogram": [list(pair) for pair in fp.order_histogram],
        "center_order": fp.center_order,
        "derived_order": fp.derived_order,
        "abelian_invariants": list(fp.abelian_invariants),
    }


def c_structure_string(m: int, p: int) -> str:
    if p == 1:
        return f"Z{m} : Z3"
    return f"(Z{m} x Z{p}) : Z3"


def d_structure_string(p: int, q: int) -> str:
    if q == 1:
        return f"Z{p} : S3"
    return f"(Z{p} x Z{q}) : S3"


def analyze_c(n: int, a: int, b: int, order_cap: Optional[int] = None) -> ClassificationReport:
    """Classify C(n,a,b) and package the result."""
    start = time.perf_counter()
    record = classify_c_group(n, a, b, order_cap)
    fp = build_c_group(n, a, b, order_cap).fingerprint()
    elapsed = time.perf_counter() - start
    return ClassificationReport(
        kind="C",
        params={"n": n, "a": a, "b": b},
        structure=asdict(record),
        structure_str=c_structure_string(record.m, record.p),
        fingerprint=fingerprint_to_dict(fp),
        flags={
            "tn_flag": record.tn_flag,
            "z3_split": record.z3_split,
            "tn_prime_condition": tn_prime_condition(record.m),
        },
        timing_s=round(elapsed, 6),
    )


def analyze_d(
    n: int, a: int, b: int, d: int, r: int, s: int, order_cap: Optional[int] = None
) -> ClassificationReport:
    """Classify D(n,a,b;d,r,s) and package the result.

    The `trivial_c_extension` flag reports whether the group is exactly the
    contained C(n,a,b) extended by the reflection and nothing more, i.e.
    its order is twice the C-group order (degenerate reflection data).
    """
    start = time.perf_counter()
    record = classify_d_group(n, a, b, d, r, s, order_cap)
    fp = build_d_group(n, a, b, d, r, s, order_cap).fingerprint()
    c_dec = two_gen_decomposition(n, a, b)
    elapsed = time.perf_counter() - start
    return ClassificationReport(
        kind="D",
        params={"n": n, "a": a, "b": b, "d": d, "r": r, "s": s},
        structure=asdict(record),
        structure_str=d_structure_string(record.p, record.q),
        fingerprint=fingerprint_to_dict(fp),
        flags={
            "s3_split": record.s3_split,
            "delta6_obstruction": delta6_image_obstruction(record.order),
            "trivial_c_extension": record.order == 2 * 3 * c_dec.m * c_dec.p,
        },
        timing_s=round(elapsed, 6),
    )


def render_human(report: ClassificationReport) -> str:
    """Aligned key/value table for terminal output."""
    params = ", ".join(f"{k}={v}" for k, v in report.params.items())
    rows: list[tuple[str, str]] = [
        ("group", f"{report.kind}({params})"),
        ("order", str(report.structure["order"])),
        ("structure", report.structure_str),
    ]
    if report.kind == "C":
        rows.append(("m, p, t", "{m}, {p}, {t}".format(**report.structure)))
        rows.append(("verdict", report.structure["verdict"]))
    else:
        rows.append(("p, q", "{p}, {q}".format(**report.structure)))
    for name, value in sorted(report.flags.items()):
        rows.append((name, "yes" if value else "no"))
    hist = ", ".join(f"{o}:{c}" for o, c in report.fingerprint["element_order_histogram"])
    rows.append(("element orders", hist))
    rows.append(("center order", str(report.fingerprint["center_order"])))
    rows.append(("derived order", str(report.fingerprint["derived_order"])))
    rows.append(("abelianization", str(report.fingerprint["abelian_invariants"])))
    rows.append(("time", f"{report.timing_s:.3f}s"))
    width = max(len(name) for name, _ in rows)
    return "\n".join(f"{name:<{width}}  {value}" for name, value in rows)


def render_csv(reports: list[ClassificationReport]) -> str:
    """One CSV row per report, fixed column set, header included."""
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=_CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for report in reports:
        row = {col: "" for col in _CSV_COLUMNS}
        row["kind"] = report.kind
        row.update({k: v for k, v in report.params.items() if k in _CSV_COLUMNS})
        row["order"] = report.structure["order"]
        row["structure"] = report.structure_str
        row["verdict"] = report.structure.get("verdict", "")
        for flag in ("tn_flag", "z3_split", "s3_split", "delta6_obstruction"):
            if flag in report.flags:
                row[flag] = str(report.flags[flag]).lower()
        writer.writerow(row)
    return buf.getvalue()
