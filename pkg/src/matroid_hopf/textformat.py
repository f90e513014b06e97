"""Reading and writing the one-matroid-per-file text format.

::

    n 3
    bases
    0 1
    0 2
    1 2

``bases`` may be replaced by ``graph <num_vertices>`` followed by ``u v``
edge lines, or by a single ``uniform <k> <n>`` line.  An empty line in a
``bases`` section is the empty basis.
"""

from __future__ import annotations

from .matroid import Matroid, MatroidError, elements, from_bases, graphic, uniform


class ParseError(MatroidError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def _ints(lineno: int, text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split()]
    except ValueError:
        raise ParseError(lineno, f"expected integers, got {text!r}") from None


def parse_matroid(text: str) -> Matroid:
    lines = text.splitlines()
    if not lines or not lines[0].split() or lines[0].split()[0] != "n":
        raise ParseError(1, "first line must be 'n <int>'")
    head = lines[0].split()
    if len(head) != 2:
        raise ParseError(1, "first line must be 'n <int>'")
    n = _ints(1, head[1])[0]
    if n < 0:
        raise ParseError(1, "n must be non-negative")

    section = None
    header_line = 0
    body: list[tuple[int, str]] = []
    for lineno, line in enumerate(lines[1:], start=2):
        word = line.split()[0] if line.split() else ""
        if word in ("bases", "graph", "uniform"):
            if section is not None:
                raise ParseError(lineno, f"section '{word}' after '{section}': mixed sections are not allowed")
            section = word
            header_line = lineno
            if word == "bases" and len(line.split()) != 1:
                raise ParseError(lineno, "'bases' takes no arguments")
            if word == "graph":
                args = _ints(lineno, " ".join(line.split()[1:]))
                if len(args) != 1:
                    raise ParseError(lineno, "expected 'graph <num_vertices>'")
                num_vertices = args[0]
            if word == "uniform":
                args = _ints(lineno, " ".join(line.split()[1:]))
                if len(args) != 2:
                    raise ParseError(lineno, "expected 'uniform <k> <n>'")
                uk, un = args
            continue
        if section is None:
            raise ParseError(lineno, "expected a 'bases', 'graph' or 'uniform' section header")
        body.append((lineno, line))

    if section is None:
        raise ParseError(len(lines) + 1, "missing section")

    try:
        if section == "uniform":
            if any(line.strip() for _, line in body):
                raise ParseError(body[0][0], "'uniform' section takes no body lines")
            if un != n:
                raise ParseError(header_line, f"uniform ground size {un} does not match n {n}")
            return uniform(uk, un)
        if section == "graph":
            edges = []
            for lineno, line in body:
                if not line.strip():
                    continue
                uv = _ints(lineno, line)
                if len(uv) != 2:
                    raise ParseError(lineno, "edge lines must be 'u v'")
                edges.append((uv[0], uv[1]))
            if len(edges) != n:
                raise ParseError(header_line, f"graph has {len(edges)} edges but n is {n}")
            return graphic(num_vertices, edges)
        bases = []
        for lineno, line in body:
            elems = _ints(lineno, line)
            for e in elems:
                if not 0 <= e < n:
                    raise ParseError(lineno, f"element {e} outside 0..{n - 1}")
            bases.append(elems)
        return from_bases(n, bases)
    except ParseError:
        raise
    except MatroidError as exc:
        raise ParseError(header_line, str(exc)) from None


def format_matroid(m: Matroid) -> str:
    """Render as a ``bases`` file; labels are compacted to 0..n-1 first."""
    labels = m.labels()
    pos = {e: i for i, e in enumerate(labels)}
    lines = [f"n {len(labels)}", "bases"]
    for b in m.bases:
        lines.append(" ".join(str(pos[e]) for e in elements(b)))
    return "\n".join(lines) + "\n"


def read_matroid(path) -> Matroid:
    with open(path, encoding="utf-8") as fh:
        return parse_matroid(fh.read())
