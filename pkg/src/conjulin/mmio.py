"""Dense Matrix Market (``array`` format) reader and writer.

Only ``real general`` and ``complex general`` arrays are supported. Entries
are stored column-major, one per line, with 17 significant digits so that
a write/read round trip is exact.
"""

import os
import tempfile

import numpy as np

from .errors import DimensionError, ParseError

HEADER_REAL = "%%MatrixMarket matrix array real general"
HEADER_COMPLEX = "%%MatrixMarket matrix array complex general"


def format_float(x):
    return f"{float(x):.17g}"


def read_matrix(path):
    """Parse a dense Matrix Market file into a ``float64`` or ``complex128`` array."""
    with open(path) as fh:
        lines = fh.read().splitlines()
    if not lines:
        raise ParseError("empty file", 1)
    header = lines[0].rstrip()
    if header == HEADER_REAL:
        is_complex = False
    elif header == HEADER_COMPLEX:
        is_complex = True
    else:
        raise ParseError(f"unsupported header {header!r}", 1)

    body = [(i + 1, ln.strip()) for i, ln in enumerate(lines[1:], start=1)]
    body = [(no, ln) for no, ln in body if ln and not ln.startswith("%")]
    if not body:
        raise ParseError("missing dimension line", len(lines))
    dim_no, dim_line = body[0]
    try:
        rows, cols = (int(t) for t in dim_line.split())
    except ValueError:
        raise ParseError(f"bad dimension line {dim_line!r}", dim_no) from None
    if rows < 0 or cols < 0:
        raise ParseError("negative dimension", dim_no)

    entries = body[1:]
    if len(entries) != rows * cols:
        line = entries[-1][0] if entries else dim_no
        raise DimensionError(f"expected {rows * cols} entries, found {len(entries)}", line)
    values = np.empty(rows * cols, dtype=np.complex128 if is_complex else np.float64)
    width = 2 if is_complex else 1
    for k, (no, ln) in enumerate(entries):
        tokens = ln.split()
        if len(tokens) != width:
            raise ParseError(f"expected {width} number(s), got {ln!r}", no)
        try:
            nums = [float(t) for t in tokens]
        except ValueError:
            raise ParseError(f"not a number: {ln!r}", no) from None
        if not all(np.isfinite(nums)):
            raise ParseError(f"non-finite entry: {ln!r}", no)
        values[k] = complex(nums[0], nums[1]) if is_complex else nums[0]
    return values.reshape((cols, rows)).T.copy()


def format_matrix(a, field=None):
    a = np.asarray(a)
    if a.ndim == 1:
        a = a.reshape(-1, 1)
    if field is None:
        field = "complex" if np.iscomplexobj(a) else "real"
    out = [HEADER_COMPLEX if field == "complex" else HEADER_REAL, f"{a.shape[0]} {a.shape[1]}"]
    for v in a.T.reshape(-1):
        if field == "complex":
            v = complex(v)
            out.append(f"{format_float(v.real)} {format_float(v.imag)}")
        else:
            if np.iscomplexobj(v) and v.imag != 0:
                raise ValueError("cannot write a complex entry to a real file")
            out.append(format_float(np.real(v)))
    return "\n".join(out) + "\n"


def atomic_write_text(path, text):
    """Write through a temporary file in the same directory, then rename."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=os.path.basename(path))
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def write_matrix(path, a, field=None):
    atomic_write_text(path, format_matrix(a, field))
