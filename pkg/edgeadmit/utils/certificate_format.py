"""
Certificate files.

A layout lists `vertex support` lines in layout order under a `layout
speed=<s>` header; a hide-out lists `vertex support` lines under a `hideout
k=<k> speed=<s>` header. Lines starting with `#` are comments.
"""
from edgeadmit.exceptions.degeneracy import CertificateFormatError
from edgeadmit.schemas.certificates import HideOut, Layout
from edgeadmit.schemas.graph import format_speed, parse_speed


def serialize_layout(layout: Layout) -> str:
    """Header line, then one `vertex support` line per vertex in layout order."""
    lines = [f"layout speed={format_speed(layout.speed)}"]
    lines.extend(f"{vertex} {support}" for vertex, support in zip(layout.order, layout.supports))
    return "\n".join(lines) + "\n"


def serialize_hideout(hideout: HideOut) -> str:
    lines = [f"hideout k={hideout.k} speed={format_speed(hideout.speed)}"]
    lines.extend(f"{vertex} {hideout.supports.get(vertex, hideout.k)}" for vertex in hideout.vertices)
    return "\n".join(lines) + "\n"


def _header_fields(tokens: list[str], line_number: int) -> dict[str, str]:
    fields = {}
    for token in tokens:
        key, separator, value = token.partition("=")
        if not separator:
            raise CertificateFormatError(f"expected key=value, got {token!r}", line_number=line_number)
        fields[key] = value
    return fields


def parse_certificate(text: str) -> Layout | HideOut:
    """
    Raises:
        CertificateFormatError: On an unknown header, bad numbers or a malformed body.
    """
    rows = [
        (number, raw.strip())
        for number, raw in enumerate(text.splitlines(), start=1)
        if raw.strip() and not raw.strip().startswith("#")
    ]
    if not rows:
        raise CertificateFormatError("empty certificate")

    header_number, header = rows[0]
    kind, *tokens = header.split()
    fields = _header_fields(tokens, header_number)
    try:
        speed = parse_speed(fields.get("speed", "inf"))
        entries = []
        for number, row in rows[1:]:
            parts = row.split()
            if len(parts) != 2:
                raise CertificateFormatError(f"expected `vertex support`, got {row!r}", line_number=number)
            entries.append((int(parts[0]), int(parts[1])))

        if kind == "layout":
            return Layout(
                order=tuple(vertex for vertex, _ in entries),
                supports=tuple(support for _, support in entries),
                speed=speed,
            )
        if kind == "hideout":
            if "k" not in fields:
                raise CertificateFormatError("hide-out header needs k=<value>", line_number=header_number)
            return HideOut(
                vertices=tuple(sorted(vertex for vertex, _ in entries)),
                k=int(fields["k"]),
                speed=speed,
                supports=dict(entries),
            )
    except ValueError as error:
        raise CertificateFormatError(str(error)) from error
    raise CertificateFormatError(f"unknown certificate kind {kind!r}", line_number=header_number)
