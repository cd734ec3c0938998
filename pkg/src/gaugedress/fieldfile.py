"""The GFLD v1 text field format.

Layout::

    gfld 1
    group <u1|su2|su2xu1|affine>
    kind <connection|curvature|group|scalar|momentum>
    dims <m> <n_1> ... <n_m>
    spacing <h_1> ... <h_m>
    <one line per site, lexicographic site order>

Every scalar is written as a ``re,im`` pair with 17 significant digits, which
round-trips float64 exactly, so parse(serialize(field)) == field bitwise.
Per-site value order: one-forms list the direction index ascending, then the
algebra index; two-forms and momenta list the (i, j), i < j pairs in
lexicographic order, then the algebra index; group values are row-major
matrices; scalars are the two doublet components.
"""

from __future__ import annotations

import itertools

import numpy as np

from . import liegroup as lg
from .errors import ParseError, SpecMismatch
from .lattice import FieldKind, Lattice, LatticeField

FORMAT_KINDS = {
    "connection": FieldKind.ONE_FORM,
    "curvature": FieldKind.TWO_FORM,
    "group": FieldKind.GROUP,
    "scalar": FieldKind.SCALAR,
    "momentum": FieldKind.MOMENTUM,
}
KIND_NAMES = {v: k for k, v in FORMAT_KINDS.items()}


def _fmt(z: complex) -> str:
    return f"{z.real:.17g},{z.imag:.17g}"


def _pairs(m: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(m) for j in range(i + 1, m)]


def _site_values(field: LatticeField, site: tuple[int, ...]) -> list[complex]:
    m, d = field.lattice.dim, field.spec.algebra_dim
    v = field.data[site]
    if field.kind is FieldKind.ONE_FORM:
        return [complex(v[i, a]) for i in range(m) for a in range(d)]
    if field.kind in (FieldKind.TWO_FORM, FieldKind.MOMENTUM):
        return [complex(v[i, j, a]) for i, j in _pairs(m) for a in range(d)]
    if field.kind is FieldKind.GROUP:
        return [complex(x) for x in v.reshape(-1)]
    if field.kind is FieldKind.SCALAR:
        return [complex(v[0]), complex(v[1])]
    raise SpecMismatch(f"kind {field.kind.value} has no file representation")


def _values_per_site(kind: FieldKind, m: int, spec: lg.GroupSpec) -> int:
    d, r = spec.algebra_dim, spec.rep_dim
    return {
        FieldKind.ONE_FORM: m * d,
        FieldKind.TWO_FORM: len(_pairs(m)) * d,
        FieldKind.MOMENTUM: len(_pairs(m)) * d,
        FieldKind.GROUP: r * r,
        FieldKind.SCALAR: 2,
    }[kind]


def serialize_field(field: LatticeField) -> str:
    if field.kind not in KIND_NAMES:
        raise SpecMismatch(f"kind {field.kind.value} has no file representation")
    lat = field.lattice
    lines = [
        "gfld 1",
        f"group {field.spec.id.value}",
        f"kind {KIND_NAMES[field.kind]}",
        "dims " + " ".join([str(lat.dim)] + [str(n) for n in lat.sizes]),
        "spacing " + " ".join(f"{h:.17g}" for h in lat.spacing),
    ]
    for site in itertools.product(*(range(n) for n in lat.sizes)):
        lines.append(" ".join(_fmt(z) for z in _site_values(field, site)))
    return "\n".join(lines) + "\n"


def write_field(field: LatticeField, path) -> None:
    with open(path, "w") as fh:
        fh.write(serialize_field(field))


def _parse_pair(token: str, lineno: int) -> complex:
    parts = token.split(",")
    if len(parts) != 2:
        raise ParseError(f"expected re,im pair, got {token!r}", line=lineno)
    try:
        return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        raise ParseError(f"bad float in {token!r}", line=lineno) from None


def parse_field(text: str) -> LatticeField:
    lines = text.splitlines()

    def need(idx: int) -> str:
        if idx >= len(lines):
            raise ParseError("unexpected end of file", line=idx + 1)
        return lines[idx]

    if need(0).strip() != "gfld 1":
        raise ParseError("expected header 'gfld 1'", line=1)

    toks = need(1).split()
    if len(toks) != 2 or toks[0] != "group":
        raise ParseError("expected 'group <name>'", line=2)
    try:
        spec = lg.get_group(toks[1])
    except SpecMismatch:
        raise ParseError(f"unknown group {toks[1]!r}", line=2) from None

    toks = need(2).split()
    if len(toks) != 2 or toks[0] != "kind" or toks[1] not in FORMAT_KINDS:
        raise ParseError("expected 'kind <connection|curvature|group|scalar|momentum>'", line=3)
    kind = FORMAT_KINDS[toks[1]]

    toks = need(3).split()
    if len(toks) < 2 or toks[0] != "dims":
        raise ParseError("expected 'dims <m> <n_1> ... <n_m>'", line=4)
    try:
        m = int(toks[1])
        sizes = tuple(int(t) for t in toks[2:])
    except ValueError:
        raise ParseError("dims entries must be integers", line=4) from None
    if len(sizes) != m:
        raise ParseError(f"dims announces {m} axes but lists {len(sizes)}", line=4)
    try:
        lat = Lattice(sizes)
    except ValueError as exc:
        raise ParseError(str(exc), line=4) from None

    toks = need(4).split()
    if len(toks) != m + 1 or toks[0] != "spacing":
        raise ParseError(f"expected 'spacing' with {m} values", line=5)
    for i, t in enumerate(toks[1:]):
        try:
            h = float(t)
        except ValueError:
            raise ParseError(f"bad spacing value {t!r}", line=5) from None
        if abs(h - lat.spacing[i]) > 1e-12 * (1.0 + lat.spacing[i]):
            raise ParseError(
                f"spacing {h} inconsistent with 2*pi/{sizes[i]} on axis {i}", line=5
            )

    n_sites = int(np.prod(sizes))
    per_site = _values_per_site(kind, m, spec)
    if len(lines) != 5 + n_sites:
        raise ParseError(
            f"expected {n_sites} site lines, found {len(lines) - 5}", line=min(len(lines), 5 + n_sites) + 1
        )

    values = np.empty((n_sites, per_site), dtype=complex)
    for row, site_line in enumerate(lines[5:]):
        toks = site_line.split()
        lineno = 6 + row
        if len(toks) != per_site:
            raise ParseError(f"expected {per_site} values, found {len(toks)}", line=lineno)
        for col, tok in enumerate(toks):
            values[row, col] = _parse_pair(tok, lineno)

    return _assemble(lat, spec, kind, values)


def _assemble(lat: Lattice, spec: lg.GroupSpec, kind: FieldKind, values: np.ndarray) -> LatticeField:
    m, d, r = lat.dim, spec.algebra_dim, spec.rep_dim
    grid = lat.sizes
    if kind is FieldKind.ONE_FORM:
        data = values.real.reshape(grid + (m, d))
        return LatticeField(lat, spec, kind, data)
    if kind in (FieldKind.TWO_FORM, FieldKind.MOMENTUM):
        pairs = _pairs(m)
        flat = values.real.reshape(grid + (len(pairs), d))
        data = np.zeros(grid + (m, m, d))
        for idx, (i, j) in enumerate(pairs):
            data[..., i, j, :] = flat[..., idx, :]
            data[..., j, i, :] = -flat[..., idx, :]
        return LatticeField(lat, spec, kind, data)
    if kind is FieldKind.GROUP:
        return LatticeField(lat, spec, kind, values.reshape(grid + (r, r)))
    return LatticeField(lat, spec, kind, values.reshape(grid + (2,)))


def read_field(path) -> LatticeField:
    with open(path) as fh:
        return parse_field(fh.read())
