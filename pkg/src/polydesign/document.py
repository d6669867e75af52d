"""Serializable design documents and design-file parsing.

The document is a plain mapping with a fixed field order (degree, coef,
case_tag, designs, variance, h, certificate_coeffs, metadata). Rendering is
deterministic and writes every float with 17 significant digits, which is
enough to reproduce the exact double on parse, so documents round-trip
losslessly. Design files may be either a full document or the minimal form
``{"support": [...], "weights": [...]}``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .design import Design, DesignProblem
from .errors import DocumentError, InvalidDesignError
from .polynomial import Polynomial
from .solver import OptimalResult

#: metadata recorded in every rendered document
TOOL_VERSION = "0.1.0"
_DEFAULT_TOLERANCES = {
    "rank_tol": 1e-10,
    "condition_tol": 1e-9,
    "variance_rtol": 1e-8,
}


@dataclass
class DesignDocument:
    degree: int
    coef: int
    case_tag: str
    designs: list[dict]  # each {"support": [...], "weights": [...]}
    variance: float
    h: float
    certificate_coeffs: list[float]
    metadata: dict = field(default_factory=dict)


def document_from_result(result: OptimalResult, grid_size: int | None = None) -> DesignDocument:
    metadata: dict = {"version": TOOL_VERSION, "tolerances": dict(_DEFAULT_TOLERANCES)}
    if grid_size is not None:
        metadata["grid_size"] = int(grid_size)
    return DesignDocument(
        degree=result.problem.n,
        coef=result.problem.p,
        case_tag=result.case_tag,
        designs=[
            {"support": [float(x) for x in d.support], "weights": [float(w) for w in d.weights]}
            for d in result.designs
        ],
        variance=float(result.variance),
        h=float(result.h),
        certificate_coeffs=[float(c) for c in result.certificate.coeffs],
        metadata=metadata,
    )


def _emit(value, indent: int, pieces: list[str]) -> None:
    pad = "  " * indent
    if isinstance(value, dict):
        if not value:
            pieces.append("{}")
            return
        pieces.append("{\n")
        for i, (key, item) in enumerate(value.items()):
            pieces.append(f"{pad}  {json.dumps(key)}: ")
            _emit(item, indent + 1, pieces)
            pieces.append(",\n" if i < len(value) - 1 else "\n")
        pieces.append(pad + "}")
    elif isinstance(value, (list, tuple)):
        pieces.append("[")
        for i, item in enumerate(value):
            _emit(item, indent, pieces)
            if i < len(value) - 1:
                pieces.append(", ")
        pieces.append("]")
    elif isinstance(value, bool):
        pieces.append("true" if value else "false")
    elif isinstance(value, float):
        pieces.append(format(value, ".17g"))
    elif isinstance(value, int):
        pieces.append(str(value))
    elif isinstance(value, str):
        pieces.append(json.dumps(value))
    elif value is None:
        pieces.append("null")
    else:
        raise TypeError(f"cannot serialize {type(value).__name__}")


def render_document(doc: DesignDocument) -> str:
    """Deterministic JSON text with 17-significant-digit floats."""
    payload = {
        "degree": doc.degree,
        "coef": doc.coef,
        "case_tag": doc.case_tag,
        "designs": doc.designs,
        "variance": doc.variance,
        "h": doc.h,
        "certificate_coeffs": doc.certificate_coeffs,
        "metadata": doc.metadata,
    }
    pieces: list[str] = []
    _emit(payload, 0, pieces)
    pieces.append("\n")
    return "".join(pieces)


def parse_document(text: str) -> DesignDocument:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"design document is not valid JSON: {exc}") from exc
    if not isinstance(raw, dict):
        raise DocumentError("design document must be a JSON object")
    try:
        return DesignDocument(
            degree=int(raw["degree"]),
            coef=int(raw["coef"]),
            case_tag=str(raw["case_tag"]),
            designs=[
                {
                    "support": [float(x) for x in d["support"]],
                    "weights": [float(w) for w in d["weights"]],
                }
                for d in raw["designs"]
            ],
            variance=float(raw["variance"]),
            h=float(raw["h"]),
            certificate_coeffs=[float(c) for c in raw["certificate_coeffs"]],
            metadata=raw.get("metadata", {}),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise DocumentError(f"malformed design document: {exc}") from exc


def parse_design_file(text: str, problem: DesignProblem) -> tuple[list[Design], Polynomial | None]:
    """Designs (and certificate, when present) from a design file.

    Accepts the full document form or the minimal
    ``{"support": [...], "weights": [...]}`` form. Invalid designs raise
    :class:`DocumentError`.
    """
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"design file is not valid JSON: {exc}") from exc
    if not isinstance(raw, dict):
        raise DocumentError("design file must be a JSON object")

    certificate = None
    if "designs" in raw:
        doc = parse_document(text)
        if (doc.degree, doc.coef) != (problem.n, problem.p):
            raise DocumentError(
                f"document is for degree {doc.degree}, coef {doc.coef}; "
                f"requested degree {problem.n}, coef {problem.p}"
            )
        entries = doc.designs
        if doc.certificate_coeffs:
            certificate = Polynomial(doc.certificate_coeffs)
    elif "support" in raw and "weights" in raw:
        entries = [raw]
    else:
        raise DocumentError("design file must contain 'designs' or 'support'/'weights'")

    designs = []
    for entry in entries:
        try:
            designs.append(Design(entry["support"], entry["weights"]))
        except (InvalidDesignError, KeyError, TypeError, ValueError) as exc:
            raise DocumentError(f"invalid design in file: {exc}") from exc
    if not designs:
        raise DocumentError("design file contains no designs")
    return designs, certificate
