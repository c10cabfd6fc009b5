"""Split certificates and their JSON form (schema "cert-v1").

A certificate is plain data: the input A, the parts N and D, the mode and
what was claimed about D, plus one record per invariant-factor block saying
how that block was split.  Matrices are stored in the matrix file format.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field

from .matrix import Mat, format_matrix, parse_matrix

SCHEMA = "cert-v1"
MODES = ("diag-split", "potent4-f2", "potent-subfield")


class CertificateError(ValueError):
    pass


@dataclass(frozen=True)
class BlockRecord:
    offset: int
    degree: int
    factor: tuple[int, ...]  # invariant factor, constant term first
    rule: str
    a: int | None = None
    normalization: tuple[str, int] = ("none", 0)
    layout: tuple[tuple[str, int], ...] = ()  # (kind, row within the block)
    stated_eigenvalues: tuple[int, ...] = ()


@dataclass
class SplitCertificate:
    A: Mat
    N: Mat
    D: Mat
    mode: str
    potency_s: int | None
    diagonalizable: bool
    eigenvalues: tuple[tuple[int, int], ...] = ()  # (root, multiplicity) of charpoly(D)
    blocks: tuple[BlockRecord, ...] = ()
    basis: Mat | None = None
    subfield_degree: int | None = None
    checks: dict[str, bool] = dc_field(default_factory=dict)

    @property
    def field(self):
        return self.A.field

    @property
    def order(self) -> int:
        return self.A.n

    @property
    def chosen_a(self) -> list[int | None]:
        return [b.a for b in self.blocks]

    @property
    def block_layout(self) -> list[tuple[str, int]]:
        """(kind, row) of every diagonal atom, rows counted in the canonical basis."""
        return [(kind, b.offset + pos) for b in self.blocks for kind, pos in b.layout]

    def to_dict(self) -> dict:
        def hx(x):
            return None if x is None else f"{x:#x}"

        return {
            "schema": SCHEMA,
            "field": self.field.designation(),
            "order": self.order,
            "mode": self.mode,
            "subfield_degree": self.subfield_degree,
            "potency_s": self.potency_s,
            "diagonalizable": self.diagonalizable,
            "eigenvalues": [[hx(r), k] for r, k in self.eigenvalues],
            "A": format_matrix(self.A),
            "N": format_matrix(self.N),
            "D": format_matrix(self.D),
            "basis": None if self.basis is None else format_matrix(self.basis),
            "blocks": [
                {
                    "offset": b.offset,
                    "degree": b.degree,
                    "factor": [hx(c) for c in b.factor],
                    "rule": b.rule,
                    "a": hx(b.a),
                    "normalization": {"kind": b.normalization[0], "value": hx(b.normalization[1])},
                    "layout": [[k, p] for k, p in b.layout],
                    "stated_eigenvalues": [hx(x) for x in b.stated_eigenvalues],
                }
                for b in self.blocks
            ],
            "checks": dict(self.checks),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    @classmethod
    def from_dict(cls, doc: dict) -> "SplitCertificate":
        if doc.get("schema") != SCHEMA:
            raise CertificateError(f"unsupported certificate schema {doc.get('schema')!r}")
        if doc.get("mode") not in MODES:
            raise CertificateError(f"unknown mode {doc.get('mode')!r}")

        def ix(x):
            return None if x is None else int(x, 16)

        try:
            A = parse_matrix(doc["A"])
            N = parse_matrix(doc["N"], A.field)
            D = parse_matrix(doc["D"], A.field)
            basis = parse_matrix(doc["basis"], A.field) if doc.get("basis") else None
            blocks = tuple(
                BlockRecord(
                    offset=int(b["offset"]),
                    degree=int(b["degree"]),
                    factor=tuple(ix(c) for c in b["factor"]),
                    rule=b["rule"],
                    a=ix(b.get("a")),
                    normalization=(b["normalization"]["kind"], ix(b["normalization"]["value"]) or 0),
                    layout=tuple((k, int(p)) for k, p in b.get("layout", [])),
                    stated_eigenvalues=tuple(ix(x) for x in b.get("stated_eigenvalues", [])),
                )
                for b in doc.get("blocks", [])
            )
            return cls(
                A=A,
                N=N,
                D=D,
                mode=doc["mode"],
                potency_s=doc.get("potency_s"),
                diagonalizable=bool(doc.get("diagonalizable", False)),
                eigenvalues=tuple((ix(r), int(k)) for r, k in doc.get("eigenvalues", [])),
                blocks=blocks,
                basis=basis,
                subfield_degree=doc.get("subfield_degree"),
                checks={str(k): bool(v) for k, v in doc.get("checks", {}).items()},
            )
        except (KeyError, TypeError, AttributeError) as exc:
            raise CertificateError(f"malformed certificate: {exc}") from exc

    @classmethod
    def from_json(cls, text: str) -> "SplitCertificate":
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise CertificateError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
        if not isinstance(doc, dict):
            raise CertificateError("certificate must be a JSON object")
        return cls.from_dict(doc)
