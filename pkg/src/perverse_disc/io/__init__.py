"""Reading and writing JSON documents."""

from .documents import Document, DocumentKind, parse, serialize, to_document, to_payload

__all__ = ["Document", "DocumentKind", "parse", "serialize", "to_document", "to_payload"]
