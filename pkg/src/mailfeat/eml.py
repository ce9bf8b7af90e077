"""Parse raw EML bytes into headers, a MIME tree and the seven canonical parts.

The stdlib ``email`` parser does the boundary splitting and transfer
decoding. Everything the features depend on (charset fallback, address
splitting, attachment classification, body assembly) is decided here so the
behaviour does not drift with the Python version.
"""

from __future__ import annotations

import codecs
import re
from dataclasses import dataclass, field
from email import message_from_bytes
from email.header import decode_header
from email.message import Message
from email.policy import compat32
from pathlib import Path
from typing import NamedTuple, Optional, Union

__all__ = [
    "Address",
    "AttachmentInfo",
    "EmailParts",
    "MalformedMessage",
    "MimePart",
    "ParsedEmail",
    "RawMessage",
    "decode_header_value",
    "header_value",
    "parse_address_list",
    "parse_eml",
]

_HEADER_LINE = re.compile(rb"^[\x21-\x39\x3b-\x7e]+[ \t]*:")
_FOLD = re.compile(r"\r?\n(?=[ \t])")


class MalformedMessage(ValueError):
    """The bytes are not recognisable as an Internet message."""


@dataclass(frozen=True)
class RawMessage:
    source_path: Optional[Path]
    bytes: bytes

    @classmethod
    def from_path(cls, path: Union[str, Path]) -> "RawMessage":
        path = Path(path)
        return cls(source_path=path, bytes=path.read_bytes())


class Address(NamedTuple):
    display_name: str
    addr_spec: str

    @property
    def is_malformed(self) -> bool:
        return self.addr_spec.count("@") != 1

    @property
    def domain(self) -> str:
        """Lowercased text after the last ``@`` (empty when malformed)."""
        if self.is_malformed:
            return ""
        return self.addr_spec.rsplit("@", 1)[1].strip().lower()


@dataclass(frozen=True)
class AttachmentInfo:
    filename: Optional[str]
    content_type: str
    size_bytes: int


@dataclass
class MimePart:
    content_type: str
    disposition: str  # "inline" | "attachment" | "none"
    decoded_body: Union[str, bytes, None] = None
    filename: Optional[str] = None
    declared_type: bool = True
    children: list["MimePart"] = field(default_factory=list)

    @property
    def is_multipart(self) -> bool:
        return self.content_type.startswith("multipart/")

    def walk(self):
        yield self
        for child in self.children:
            yield from child.walk()


@dataclass
class EmailParts:
    from_addr: list[Address] = field(default_factory=list)
    to_addrs: list[Address] = field(default_factory=list)
    cc_addrs: list[Address] = field(default_factory=list)
    bcc_addrs: list[Address] = field(default_factory=list)
    subject: str = ""
    text_body: str = ""
    html_body: str = ""
    attachments: list[AttachmentInfo] = field(default_factory=list)


@dataclass
class ParsedEmail:
    headers: list[tuple[str, str]]
    mime_tree: MimePart
    parts: EmailParts

    def header(self, name: str) -> Optional[str]:
        return header_value(self, name)

    def header_all(self, name: str) -> list[str]:
        key = name.lower()
        return [v for n, v in self.headers if n.lower() == key]

    def content_types(self) -> set[str]:
        return {p.content_type for p in self.mime_tree.walk()}


# --- charset handling -------------------------------------------------------


def _known_codec(charset: Optional[str]) -> Optional[str]:
    if not charset:
        return None
    charset = charset.strip().strip('"').lower()
    try:
        return codecs.lookup(charset).name
    except (LookupError, ValueError):
        return None


def _decode_bytes(data: bytes, charset: Optional[str]) -> str:
    """Decode with the declared charset, falling back to Latin-1 (never fails)."""
    codec = _known_codec(charset)
    if codec is not None:
        try:
            return data.decode(codec)
        except (UnicodeDecodeError, LookupError):
            pass
    elif charset is None:
        try:
            return data.decode("utf-8")
        except UnicodeDecodeError:
            pass
    return data.decode("latin-1")


def _raw_bytes(value: str) -> bytes:
    # compat32 smuggles 8-bit header bytes through as surrogate escapes
    return value.encode("ascii", "surrogateescape")


def decode_header_value(value: str) -> str:
    """Unfold a header value and resolve RFC 2047 encoded-words."""
    value = _FOLD.sub("", value)
    try:
        chunks = decode_header(value)
    except Exception:
        chunks = [(_raw_bytes(value), None)]
    out = []
    for chunk, charset in chunks:
        if isinstance(chunk, str):
            chunk = _raw_bytes(chunk)
        out.append(_decode_bytes(chunk, charset))
    return "".join(out).strip()


# --- address lists ----------------------------------------------------------


def _split_top_level(value: str, sep: str) -> list[str]:
    """Split on ``sep`` outside quotes, angle brackets and comments."""
    items, buf = [], []
    in_quote = False
    angle = paren = 0
    escape = False
    for ch in value:
        if escape:
            buf.append(ch)
            escape = False
            continue
        if ch == "\\" and (in_quote or paren):
            buf.append(ch)
            escape = True
            continue
        if in_quote:
            if ch == '"':
                in_quote = False
        elif ch == '"':
            in_quote = True
        elif ch == "(":
            paren += 1
        elif ch == ")" and paren:
            paren -= 1
        elif ch == "<" and not paren:
            angle += 1
        elif ch == ">" and angle and not paren:
            angle -= 1
        elif ch == sep and not angle and not paren:
            items.append("".join(buf))
            buf = []
            continue
        buf.append(ch)
    items.append("".join(buf))
    return items


def _strip_comments(text: str) -> str:
    prev = None
    while prev != text:
        prev = text
        text = re.sub(r"\([^()]*\)", " ", text)
    return text


def _unquote_name(name: str) -> str:
    name = name.strip()
    if len(name) >= 2 and name[0] == name[-1] == '"':
        name = re.sub(r"\\(.)", r"\1", name[1:-1])
    return decode_header_value(name) if "=?" in name else name


def _parse_mailbox(text: str) -> Optional[Address]:
    text = text.strip()
    if not text:
        return None
    m = re.search(r"<([^<>]*)>\s*$", text)
    if m is None:
        m = re.search(r"<([^<>]*)>", text)
    if m is not None:
        addr = _strip_comments(m.group(1)).strip()
        name = text[: m.start()]
        if not name.strip():
            trailing = re.search(r"\(([^()]*)\)", text[m.end():])
            name = trailing.group(1) if trailing else ""
        return Address(_unquote_name(name), addr)
    comment = re.search(r"\(([^()]*)\)", text)
    addr = " ".join(_strip_comments(text).split())
    name = comment.group(1).strip() if comment else ""
    if not addr and not name:
        return None
    return Address(_unquote_name(name), addr)


def parse_address_list(value: Optional[str]) -> list[Address]:
    """Split a raw address header into mailboxes.

    Group syntax (``name: a@b, c@d;``) is flattened; empty groups such as
    ``undisclosed-recipients:;`` contribute nothing. Anything without exactly
    one ``@`` is kept verbatim and reports ``is_malformed``.
    """
    if not value:
        return []
    value = _FOLD.sub("", value)
    out = []
    for chunk in _split_top_level(value, ","):
        chunk = chunk.strip()
        # group display-name prefix "label:"
        head = _split_top_level(chunk, ":")
        if len(head) > 1 and "@" not in head[0] and "<" not in head[0]:
            chunk = ":".join(head[1:])
        chunk = chunk.strip().rstrip(";").strip()
        mailbox = _parse_mailbox(chunk)
        if mailbox is not None:
            out.append(mailbox)
    return out


# --- MIME tree --------------------------------------------------------------


def _disposition(msg: Message) -> str:
    value = msg.get("Content-Disposition")
    if value is None:
        return "none"
    kind = str(value).split(";", 1)[0].strip().lower()
    if kind == "attachment":
        return "attachment"
    if kind == "inline":
        return "inline"
    return "none"


def _filename(msg: Message) -> Optional[str]:
    try:
        name = msg.get_param("filename", header="Content-Disposition")
        if name is None:
            name = msg.get_param("name", header="Content-Type")
    except Exception:
        return None
    if name is None:
        return None
    if isinstance(name, tuple):  # RFC 2231
        charset, _lang, text = name
        name = _decode_bytes(_raw_bytes(text) if isinstance(text, str) else text, charset or None)
    else:
        name = decode_header_value(str(name))
    return name or None


def _normalize_newlines(text: str) -> str:
    return text.replace("\r\n", "\n").replace("\r", "\n")


def _build_tree(msg: Message) -> MimePart:
    declared = msg.get("Content-Type") is not None
    ctype = msg.get_content_type().lower() if declared else "text/plain"
    node = MimePart(
        content_type=ctype,
        disposition=_disposition(msg),
        filename=_filename(msg),
        declared_type=declared,
    )
    payload = msg.get_payload()
    if ctype.startswith("multipart/") and isinstance(payload, list):
        node.children = [_build_tree(sub) for sub in payload if isinstance(sub, Message)]
        return node
    if ctype == "message/rfc822" or isinstance(payload, list):
        # not recursed into; kept as an opaque blob
        inner = payload[0] if isinstance(payload, list) and payload else None
        node.decoded_body = inner.as_bytes() if isinstance(inner, Message) else b""
        return node
    try:
        data = msg.get_payload(decode=True)
    except Exception:
        data = None
    if data is None:
        data = b""
    if ctype.startswith("text/"):
        node.decoded_body = _normalize_newlines(_decode_bytes(data, msg.get_content_charset()))
    else:
        node.decoded_body = data
    return node


def _body_size(part: MimePart) -> int:
    body = part.decoded_body
    if body is None:
        return 0
    if isinstance(body, str):
        return len(body.encode("utf-8"))
    return len(body)


def _collect(node: MimePart, parent_type: Optional[str], parts: EmailParts,
             texts: list[str], htmls: list[str]) -> None:
    if node.is_multipart:
        for child in node.children:
            _collect(child, node.content_type, parts, texts, htmls)
        return
    is_attachment = (
        node.disposition == "attachment"
        or node.filename is not None
        or (not node.content_type.startswith("text/") and parent_type != "multipart/alternative")
    )
    if is_attachment:
        parts.attachments.append(AttachmentInfo(
            filename=node.filename,
            content_type=node.content_type if node.declared_type else "application/octet-stream",
            size_bytes=_body_size(node),
        ))
    elif node.content_type == "text/plain":
        texts.append(node.decoded_body or "")
    elif node.content_type == "text/html":
        htmls.append(node.decoded_body or "")


def _check_wellformed(data: bytes) -> None:
    lines = data.replace(b"\r\n", b"\n").split(b"\n")
    if any(not line.strip(b" \t\r") for line in lines):
        return
    if any(_HEADER_LINE.match(line) for line in lines):
        return
    raise MalformedMessage("no header/body separator and no header line")


def _as_raw(raw: Union[RawMessage, bytes]) -> RawMessage:
    return raw if isinstance(raw, RawMessage) else RawMessage(None, raw)


def parse_eml(raw: Union[RawMessage, bytes]) -> ParsedEmail:
    """Parse one EML message.

    Raises :class:`MalformedMessage` when the input is empty or has neither a
    blank separator line nor a single parseable header line. Damaged MIME
    parts degrade to empty bodies instead of raising.
    """
    raw = _as_raw(raw)
    if not raw.bytes:
        raise MalformedMessage("empty input")
    _check_wellformed(raw.bytes)
    try:
        msg = message_from_bytes(raw.bytes, policy=compat32)
    except Exception as exc:  # pragma: no cover - compat32 is very lenient
        raise MalformedMessage(f"unparseable message: {exc}") from exc

    headers = [(name, decode_header_value(str(value))) for name, value in msg.items()]
    tree = _build_tree(msg)

    def raw_header(name: str) -> Optional[str]:
        value = msg.get(name)
        if value is None:
            return None
        return _decode_bytes(_raw_bytes(str(value)), None)

    parts = EmailParts(
        from_addr=parse_address_list(raw_header("From")),
        to_addrs=parse_address_list(raw_header("To")),
        cc_addrs=parse_address_list(raw_header("Cc")),
        bcc_addrs=parse_address_list(raw_header("Bcc")),
    )
    email = ParsedEmail(headers=headers, mime_tree=tree, parts=parts)
    parts.subject = header_value(email, "Subject") or ""

    texts: list[str] = []
    htmls: list[str] = []
    _collect(tree, None, parts, texts, htmls)
    parts.text_body = "\n".join(texts)
    parts.html_body = "\n".join(htmls)
    return email


def header_value(email: ParsedEmail, name: str) -> Optional[str]:
    """First occurrence of a header, case-insensitively; None when absent."""
    key = name.lower()
    for hname, value in email.headers:
        if hname.lower() == key:
            return value
    return None
