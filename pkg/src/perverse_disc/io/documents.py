"""
JSON documents for objects and morphisms of C, A2 and A1.

Rationals travel as strings (``"-3/7"``), never floats. Maps are row-major
grids with explicit ``rows`` and ``cols``; subspaces are lists of column
vectors and are re-canonicalized on load, so any spanning set is accepted.
Morphism documents embed their source and target payloads inline.
"""

import json
import os
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Annotated, Any, Dict, List, Literal, TextIO, Tuple, Union

from pydantic import (
    AfterValidator,
    BaseModel,
    ConfigDict,
    Field,
    StrictInt,
    StrictStr,
    TypeAdapter,
    ValidationError,
    model_validator,
)

from ..domain.models import A1Object, A2Morphism, A2Object, CMorphism, CObject
from ..errors import DocumentError, DocumentShapeError, DocumentSyntaxError
from ..linalg import LinearMap, Matrix, Subspace, format_rational, parse_rational

Value = Union[CObject, A2Object, A1Object, CMorphism, A2Morphism]


class DocumentKind(str, Enum):
    """The ``kind`` tag of a document."""

    C_OBJECT = "c-object"
    A2_OBJECT = "a2-object"
    A1_OBJECT = "a1-object"
    C_MORPHISM = "c-morphism"
    A2_MORPHISM = "a2-morphism"


@dataclass(frozen=True)
class Document:
    """A parsed document: its kind and the domain value it describes."""

    kind: DocumentKind
    value: Value


# ---------------------------------------------------------------------------
# Wire models
# ---------------------------------------------------------------------------


def _check_rational(text: str) -> str:
    parse_rational(text)
    return text


RationalText = Annotated[StrictStr, AfterValidator(_check_rational)]
Count = Annotated[StrictInt, Field(ge=0)]
Grid = List[List[RationalText]]


def _grid(rows: Any) -> Grid:
    return [[format_rational(x) for x in row] for row in rows]


class _Wire(BaseModel):
    model_config = ConfigDict(extra="forbid")


class MapModel(_Wire):
    """A matrix with explicit shape."""

    rows: Count
    cols: Count
    entries: Grid = Field(description="Row-major rational strings")

    @model_validator(mode="after")
    def _shape_matches(self) -> "MapModel":
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError(f"entries do not form a {self.rows}x{self.cols} grid")
        return self

    def shape(self) -> Tuple[int, int]:
        return (self.rows, self.cols)

    def to_map(self) -> LinearMap:
        return LinearMap(Matrix.of(self.entries, self.rows, self.cols))

    @classmethod
    def from_map(cls, f: LinearMap) -> "MapModel":
        m = f.matrix
        return cls(rows=m.rows, cols=m.cols, entries=_grid(m.entries))


class CObjectBody(_Wire):
    ambient: Count = Field(description="Dimension of V")
    a1: Grid = Field(description="Spanning columns of A1")
    a2: Grid
    b1: Grid
    b2: Grid

    @model_validator(mode="after")
    def _columns_fit(self) -> "CObjectBody":
        for name in ("a1", "a2", "b1", "b2"):
            if any(len(column) != self.ambient for column in getattr(self, name)):
                raise ValueError(f"every {name} column must have {self.ambient} entries")
        return self

    def to_value(self) -> CObject:
        def span(columns: Grid) -> Subspace:
            return Subspace.span(Matrix.from_columns(columns, self.ambient))

        return CObject(
            ambient_dim=self.ambient,
            a1=span(self.a1),
            a2=span(self.a2),
            b1=span(self.b1),
            b2=span(self.b2),
        )

    @classmethod
    def from_value(cls, x: CObject) -> "CObjectBody":
        return cls(
            ambient=x.ambient_dim,
            a1=_grid(x.a1.vectors()),
            a2=_grid(x.a2.vectors()),
            b1=_grid(x.b1.vectors()),
            b2=_grid(x.b2.vectors()),
        )


class A2Dims(_Wire):
    minus: Count
    zero: Count
    plus: Count


class A2ObjectBody(_Wire):
    dims: A2Dims
    delta_minus: MapModel
    gamma_minus: MapModel
    delta_plus: MapModel
    gamma_plus: MapModel

    @model_validator(mode="after")
    def _maps_fit(self) -> "A2ObjectBody":
        d = self.dims
        expected = {
            "delta_minus": (d.zero, d.minus),
            "gamma_minus": (d.minus, d.zero),
            "delta_plus": (d.zero, d.plus),
            "gamma_plus": (d.plus, d.zero),
        }
        for name, shape in expected.items():
            if getattr(self, name).shape() != shape:
                raise ValueError(f"{name} must be {shape[0]}x{shape[1]}")
        return self

    def to_value(self) -> A2Object:
        return A2Object(
            n_minus=self.dims.minus,
            n_zero=self.dims.zero,
            n_plus=self.dims.plus,
            delta_minus=self.delta_minus.to_map(),
            gamma_minus=self.gamma_minus.to_map(),
            delta_plus=self.delta_plus.to_map(),
            gamma_plus=self.gamma_plus.to_map(),
        )

    @classmethod
    def from_value(cls, e: A2Object) -> "A2ObjectBody":
        return cls(
            dims=A2Dims(minus=e.n_minus, zero=e.n_zero, plus=e.n_plus),
            delta_minus=MapModel.from_map(e.delta_minus),
            gamma_minus=MapModel.from_map(e.gamma_minus),
            delta_plus=MapModel.from_map(e.delta_plus),
            gamma_plus=MapModel.from_map(e.gamma_plus),
        )


class A1ObjectBody(_Wire):
    m: Count
    n: Count
    u: MapModel = Field(description="m x n")
    v: MapModel = Field(description="n x m")

    @model_validator(mode="after")
    def _maps_fit(self) -> "A1ObjectBody":
        if self.u.shape() != (self.m, self.n):
            raise ValueError(f"u must be {self.m}x{self.n}")
        if self.v.shape() != (self.n, self.m):
            raise ValueError(f"v must be {self.n}x{self.m}")
        return self

    def to_value(self) -> A1Object:
        return A1Object(m=self.m, n=self.n, u=self.u.to_map(), v=self.v.to_map())

    @classmethod
    def from_value(cls, a: A1Object) -> "A1ObjectBody":
        return cls(m=a.m, n=a.n, u=MapModel.from_map(a.u), v=MapModel.from_map(a.v))


class CMorphismBody(_Wire):
    source: CObjectBody
    target: CObjectBody
    map: MapModel

    @model_validator(mode="after")
    def _map_fits(self) -> "CMorphismBody":
        shape = (self.target.ambient, self.source.ambient)
        if self.map.shape() != shape:
            raise ValueError(f"map must be {shape[0]}x{shape[1]}")
        return self

    def to_value(self) -> CMorphism:
        return CMorphism(self.source.to_value(), self.target.to_value(), self.map.to_map())

    @classmethod
    def from_value(cls, f: CMorphism) -> "CMorphismBody":
        return cls(
            source=CObjectBody.from_value(f.source),
            target=CObjectBody.from_value(f.target),
            map=MapModel.from_map(f.map),
        )


class A2MorphismBody(_Wire):
    source: A2ObjectBody
    target: A2ObjectBody
    e_minus: MapModel
    e_zero: MapModel
    e_plus: MapModel

    @model_validator(mode="after")
    def _maps_fit(self) -> "A2MorphismBody":
        src, tgt = self.source.dims, self.target.dims
        expected = {
            "e_minus": (tgt.minus, src.minus),
            "e_zero": (tgt.zero, src.zero),
            "e_plus": (tgt.plus, src.plus),
        }
        for name, shape in expected.items():
            if getattr(self, name).shape() != shape:
                raise ValueError(f"{name} must be {shape[0]}x{shape[1]}")
        return self

    def to_value(self) -> A2Morphism:
        return A2Morphism(
            self.source.to_value(),
            self.target.to_value(),
            self.e_minus.to_map(),
            self.e_zero.to_map(),
            self.e_plus.to_map(),
        )

    @classmethod
    def from_value(cls, f: A2Morphism) -> "A2MorphismBody":
        return cls(
            source=A2ObjectBody.from_value(f.source),
            target=A2ObjectBody.from_value(f.target),
            e_minus=MapModel.from_map(f.e_minus),
            e_zero=MapModel.from_map(f.e_zero),
            e_plus=MapModel.from_map(f.e_plus),
        )


class CObjectDocument(CObjectBody):
    kind: Literal["c-object"]


class A2ObjectDocument(A2ObjectBody):
    kind: Literal["a2-object"]


class A1ObjectDocument(A1ObjectBody):
    kind: Literal["a1-object"]


class CMorphismDocument(CMorphismBody):
    kind: Literal["c-morphism"]


class A2MorphismDocument(A2MorphismBody):
    kind: Literal["a2-morphism"]


AnyDocument = Annotated[
    Union[
        CObjectDocument,
        A2ObjectDocument,
        A1ObjectDocument,
        CMorphismDocument,
        A2MorphismDocument,
    ],
    Field(discriminator="kind"),
]
_DOCUMENTS: TypeAdapter = TypeAdapter(AnyDocument)

_BODIES: Dict[DocumentKind, Any] = {
    DocumentKind.C_OBJECT: CObjectBody,
    DocumentKind.A2_OBJECT: A2ObjectBody,
    DocumentKind.A1_OBJECT: A1ObjectBody,
    DocumentKind.C_MORPHISM: CMorphismBody,
    DocumentKind.A2_MORPHISM: A2MorphismBody,
}


# ---------------------------------------------------------------------------
# Public API
# ---------------------------------------------------------------------------


def to_document(value: Value) -> Document:
    """Tag a domain value with its document kind."""
    if isinstance(value, CObject):
        return Document(DocumentKind.C_OBJECT, value)
    if isinstance(value, A2Object):
        return Document(DocumentKind.A2_OBJECT, value)
    if isinstance(value, A1Object):
        return Document(DocumentKind.A1_OBJECT, value)
    if isinstance(value, CMorphism):
        return Document(DocumentKind.C_MORPHISM, value)
    if isinstance(value, A2Morphism):
        return Document(DocumentKind.A2_MORPHISM, value)
    raise TypeError(f"no document kind for {type(value).__name__}")


def _read(source: Union[str, "os.PathLike[str]", TextIO]) -> str:
    if isinstance(source, str):
        return source
    if isinstance(source, os.PathLike):
        try:
            return Path(source).read_text(encoding="utf-8")
        except UnicodeDecodeError as exc:
            raise DocumentError(f"{source} is not UTF-8 text") from exc
    return source.read()


def parse(source: Union[str, "os.PathLike[str]", TextIO]) -> Document:
    """Parse a document from JSON text, a file path or a readable stream.

    A plain ``str`` is taken as the JSON text itself; pass a ``Path`` to read
    a file. Raises DocumentSyntaxError for malformed JSON and
    DocumentShapeError when the content does not describe a document.
    """
    text = _read(source)
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentSyntaxError(exc.msg, exc.lineno, exc.colno) from exc
    except RecursionError as exc:
        raise DocumentSyntaxError("nesting too deep") from exc
    except ValueError as exc:
        raise DocumentSyntaxError(str(exc)) from exc
    try:
        wire = _DOCUMENTS.validate_python(raw)
    except ValidationError as exc:
        first = exc.errors()[0]
        path = ".".join(str(part) for part in first["loc"]) or None
        raise DocumentShapeError(first["msg"], path) from exc
    return Document(DocumentKind(wire.kind), wire.to_value())


def to_payload(document: Document) -> Dict[str, Any]:
    """The JSON-ready dict for a document, ``kind`` first."""
    body = _BODIES[document.kind].from_value(document.value)
    return {"kind": document.kind.value, **body.model_dump()}


def serialize(document: Document) -> str:
    """Canonical UTF-8 JSON text: two-space indent, trailing newline."""
    return json.dumps(to_payload(document), indent=2, ensure_ascii=False) + "\n"
