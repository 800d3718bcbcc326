"""Deterministic text formats.

Matrix file (UTF-8, ``\\n`` endings, ``#`` starts a comment line)::

    field gf 2        # or: field q
    dims 2 2
    1 0
    0 1

Rows are the vectors of the sequence.  Scalars use the canonical literal
syntax of their field (rationals additionally admit ``a/b``).

Certificate file::

    certificate
    field gf 2
    ambient 2
    length 2
    e
    <length rows of ambient entries>
    f
    <length rows>
    C
    <length rows of length entries>
    end

A trace file holds one ``level k`` block per induction level with the
same ``e``/``f``/``C`` sections plus one ``witness`` line per restriction
applied at that level.  The annihilating maps are determined by the
level's frames and are not serialized.
"""

from __future__ import annotations

from typing import List, Tuple

from .core import Matrix, VecSequence, matrix, sequence
from .field import Field, GF, QQ
from .lemma import InclusionCertificate, ProofTrace
from .spans import Frame


class FormatError(ValueError):
    """Malformed input file; message carries a line diagnostic."""


def _logical_lines(text: str) -> List[Tuple[int, str]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((lineno, line))
    return out


def _parse_field_line(lineno: int, line: str) -> Field:
    parts = line.split()
    if parts[:1] != ["field"]:
        raise FormatError(f"line {lineno}: expected 'field ...', got {line!r}")
    if parts[1:] == ["q"]:
        return QQ
    if len(parts) == 3 and parts[1] == "gf":
        try:
            return GF(int(parts[2]))
        except ValueError as exc:
            raise FormatError(f"line {lineno}: {exc}") from None
    raise FormatError(f"line {lineno}: expected 'field gf <p>' or 'field q', got {line!r}")


def _parse_row(field: Field, lineno: int, line: str, width: int):
    toks = line.split()
    if len(toks) != width:
        raise FormatError(f"line {lineno}: expected {width} entries, got {len(toks)}")
    try:
        return [field.parse(t) for t in toks]
    except ValueError as exc:
        raise FormatError(f"line {lineno}: {exc}") from None


def parse_matrix_text(text: str) -> VecSequence:
    lines = _logical_lines(text)
    if len(lines) < 2:
        raise FormatError("file must start with 'field' and 'dims' lines")
    field = _parse_field_line(*lines[0])
    lineno, dims_line = lines[1]
    parts = dims_line.split()
    if len(parts) != 3 or parts[0] != "dims":
        raise FormatError(f"line {lineno}: expected 'dims <rows> <cols>', got {dims_line!r}")
    try:
        rows, cols = int(parts[1]), int(parts[2])
    except ValueError:
        raise FormatError(f"line {lineno}: non-integer dimensions in {dims_line!r}") from None
    if rows < 0 or cols < 0:
        raise FormatError(f"line {lineno}: negative dimensions")
    data = lines[2:]
    if len(data) != rows:
        raise FormatError(f"dims declare {rows} rows but file has {len(data)} data lines")
    return sequence(field, [_parse_row(field, ln, line, cols) for ln, line in data], ambient_dim=cols)


def parse_matrix_file(path: str) -> VecSequence:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise FormatError(f"{path}: {exc.strerror or exc}") from None
    return parse_matrix_text(text)


def render_field(field: Field) -> str:
    return "field q" if field.modulus is None else f"field gf {field.modulus}"


def render_sequence(seq: VecSequence) -> str:
    lines = [render_field(seq.field), f"dims {len(seq)} {seq.ambient_dim}"]
    lines += [" ".join(str(e) for e in v.entries) for v in seq]
    return "\n".join(lines) + "\n"


def _rows(m_or_seq) -> List[str]:
    if isinstance(m_or_seq, Matrix):
        return [" ".join(str(s) for s in row) for row in m_or_seq.entries]
    return [" ".join(str(s) for s in v.entries) for v in m_or_seq]


def render_certificate(cert: InclusionCertificate) -> str:
    lines = [
        "certificate",
        render_field(cert.e.field),
        f"ambient {cert.e.ambient_dim}",
        f"length {len(cert.e)}",
        "e",
        *_rows(cert.e.seq),
        "f",
        *_rows(cert.f.seq),
        "C",
        *_rows(cert.coefficient_matrix),
        "end",
    ]
    return "\n".join(lines) + "\n"


def parse_certificate_text(text: str) -> InclusionCertificate:
    lines = _logical_lines(text)
    if not lines or lines[0][1] != "certificate":
        raise FormatError("expected a 'certificate' header line")
    if len(lines) < 4:
        raise FormatError("truncated certificate")
    field = _parse_field_line(*lines[1])

    def keyed_int(idx: int, key: str) -> int:
        lineno, line = lines[idx]
        parts = line.split()
        if len(parts) != 2 or parts[0] != key:
            raise FormatError(f"line {lineno}: expected '{key} <int>', got {line!r}")
        try:
            return int(parts[1])
        except ValueError:
            raise FormatError(f"line {lineno}: non-integer in {line!r}") from None

    ambient = keyed_int(2, "ambient")
    length = keyed_int(3, "length")
    expected = 4 + 3 * (length + 1) + 1
    if len(lines) != expected:
        raise FormatError(f"certificate should have {expected} logical lines, found {len(lines)}")
    pos = 4

    def section(name: str, width: int) -> List[List]:
        nonlocal pos
        lineno, line = lines[pos]
        if line != name:
            raise FormatError(f"line {lineno}: expected section {name!r}, got {line!r}")
        pos += 1
        rows = []
        for _ in range(length):
            lineno, line = lines[pos]
            rows.append(_parse_row(field, lineno, line, width))
            pos += 1
        return rows

    e_rows = section("e", ambient)
    f_rows = section("f", ambient)
    c_rows = section("C", length)
    if lines[pos][1] != "end":
        raise FormatError(f"line {lines[pos][0]}: expected 'end'")
    e = Frame(sequence(field, e_rows, ambient_dim=ambient))
    f = Frame(sequence(field, f_rows, ambient_dim=ambient))
    c = matrix(field, c_rows, cols=length)
    return InclusionCertificate(e, f, c)


def parse_certificate_file(path: str) -> InclusionCertificate:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise FormatError(f"{path}: {exc.strerror or exc}") from None
    return parse_certificate_text(text)


def render_trace(trace: ProofTrace) -> str:
    first = trace.levels[0]
    lines = [
        "trace",
        render_field(first.e.field),
        f"ambient {first.e.ambient_dim}",
        f"length {trace.levels[-1].rank}",
    ]
    for level in trace.levels:
        lines.append(f"level {level.rank}")
        lines.append("e")
        lines += _rows(level.e.seq)
        lines.append("f")
        lines += _rows(level.f.seq)
        for w in level.witnesses:
            lines.append("witness " + " ".join(str(s) for s in w.entries))
        lines.append("C")
        lines += _rows(level.coefficient_matrix)
    lines.append("end")
    return "\n".join(lines) + "\n"
