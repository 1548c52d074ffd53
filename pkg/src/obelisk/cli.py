"""Command-line front end: ``obelisk obt|embed|verify|render|mine|gen|recognize``.

Exit codes: 0 success, 1 negative verdict (invalid embedding or forbidden
structure found), 2 usage or parse error, 3 size guard.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

from . import __version__
from .constructive import embed_oriented_cycle, embed_tree_loose, embed_unidicyclic
from .errors import GraphSyntaxError, NotSimple, ObeliskError, SizeGuard, UnknownVertex
from .generate import SHAPES, generate
from .graph import OrientedGraph, Shape, classify_shape, components, format_graph, is_connected, parse_graph
from .layout import SPINE, BookEmbedding, format_embedding, parse_embedding, verify
from .oracle import OBT_MAX_N, mine_critical, obt
from .recognizers import (
    ForbiddenWitness,
    classify_M1,
    decompose_unidicyclic,
    detect_I,
    detect_R,
    detect_T,
    heavy_vertices,
    is_unidicyclic,
    m1_witness,
)
from .render import render_svg

EXIT_OK = 0
EXIT_VERDICT = 1
EXIT_USAGE = 2
EXIT_GUARD = 3


class Output:
    """Collects human lines and porcelain key/value pairs for one command."""

    def __init__(self, porcelain: bool):
        self.porcelain = porcelain
        self.lines: List[str] = []
        self.fields: List[Tuple[str, str]] = []

    def say(self, line: str) -> None:
        self.lines.append(line)

    def field(self, key: str, value) -> None:
        self.fields.append((key, str(value)))

    def flush(self, stream=None) -> None:
        stream = stream or sys.stdout
        if self.porcelain:
            for k, v in self.fields:
                stream.write(f"{k}\t{v}\n")
        else:
            for line in self.lines:
                stream.write(line + "\n")


def _max_n(args) -> Optional[int]:
    if getattr(args, "max_n", None) is not None:
        return args.max_n
    env = os.environ.get("OBELISK_MAX_N")
    if env:
        try:
            return int(env)
        except ValueError:
            raise GraphSyntaxError(f"OBELISK_MAX_N must be an integer, got {env!r}") from None
    return None


def _read_graph(path: str, implicit: bool) -> OrientedGraph:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise GraphSyntaxError(f"cannot read {path}: {exc.strerror}") from None
    return parse_graph(text, implicit_vertices=implicit)


def _read_embedding(path: str) -> BookEmbedding:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise GraphSyntaxError(f"cannot read {path}: {exc.strerror}") from None
    return parse_embedding(text)


def _write(path: str, text: str) -> None:
    Path(path).write_text(text, encoding="utf-8")


def _save_figure(g: OrientedGraph, emb: BookEmbedding, path: Optional[str], title: str, out: Output) -> None:
    if not path:
        return
    from .figures import save_embedding_figure

    save_embedding_figure(g, emb, path, title)
    out.say(f"figure written to {path}")
    out.field("figure", path)


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------


def cmd_obt(args, out: Output) -> int:
    g = _read_graph(args.file, args.implicit_vertices)
    result = obt(g, max_n=_max_n(args), jobs=args.jobs)
    out.say(f"obt = {result.thickness}")
    out.field("obt", result.thickness)
    out.field("vertices", len(g.vertices))
    out.field("arcs", len(g.arcs))
    if args.witness:
        _write(args.witness, format_embedding(result.witness))
        out.say(f"witness written to {args.witness}")
        out.field("witness", args.witness)
    _save_figure(g, result.witness, args.figure, f"obt = {result.thickness}", out)
    return EXIT_OK


def _dipath_embedding(g: OrientedGraph) -> BookEmbedding:
    start = next(v for v in g.sorted_vertices() if not g.in_neighbors(v))
    spine = [start]
    while g.out_neighbors(spine[-1]):
        spine.append(next(iter(g.out_neighbors(spine[-1]))))
    return BookEmbedding(tuple(spine), {a: SPINE for a in g.arcs}, 0)


def auto_embed(g: OrientedGraph, max_n: Optional[int] = None):
    """Dispatch to a constructive embedder by shape, falling back to the oracle.

    Returns ``(embedding_or_witness, method)``.
    """
    if is_connected(g):
        shape = classify_shape(g)
        if shape == Shape.DIPATH:
            return _dipath_embedding(g), "constructive:dipath"
        if shape in (Shape.DICYCLE, Shape.ORIENTED_CYCLE):
            return embed_oriented_cycle(g), "constructive:cycle"
        if shape in (Shape.ORIENTED_PATH, Shape.ORIENTED_TREE):
            return embed_tree_loose(g, min(g.vertices)), "constructive:tree"
        if is_unidicyclic(g):
            return embed_unidicyclic(g), "constructive:unidicyclic"
    return obt(g, max_n=max_n).witness, "exact"


def cmd_embed(args, out: Output) -> int:
    g = _read_graph(args.file, args.implicit_vertices)
    if args.method == "exact":
        result, method = obt(g, max_n=_max_n(args)).witness, "exact"
    else:
        result, method = auto_embed(g, _max_n(args))
    # without -o stdout carries the embedding itself, so the report is commented
    note = "" if args.output or isinstance(result, ForbiddenWitness) else "# "
    out.say(f"{note}method: {method}")
    out.field("method", method)
    if isinstance(result, ForbiddenWitness):
        out.say("forbidden structure found; no 1-page embedding exists")
        out.say(result.format().rstrip())
        out.field("verdict", "forbidden")
        out.field("family", result.family.value)
        return EXIT_VERDICT
    out.field("verdict", "embedded")
    out.field("pages", result.pages)
    text = format_embedding(result)
    if args.output:
        _write(args.output, text)
        out.say(f"{result.pages}-page embedding written to {args.output}")
        out.field("output", args.output)
    else:
        out.say(f"# {result.pages}-page embedding")
        out.say(text.rstrip())
    if args.figure:
        _save_figure(g, result, args.figure, method, out)
        if note:
            out.lines[-1] = note + out.lines[-1]
    return EXIT_OK


def cmd_verify(args, out: Output) -> int:
    g = _read_graph(args.graph, args.implicit_vertices)
    emb = _read_embedding(args.embedding)
    report = verify(g, emb)
    out.say(str(report))
    out.field("valid", "true" if report.valid else "false")
    out.field("pages", emb.pages)
    for v in report.violations:
        out.field("violation", v.rule.value + " " + " ".join(f"{a.tail},{a.head}" for a in v.arcs))
    return EXIT_OK if report.valid else EXIT_VERDICT


def cmd_render(args, out: Output) -> int:
    g = _read_graph(args.graph, args.implicit_vertices)
    emb = _read_embedding(args.embedding)
    report = verify(g, emb)
    if not report.valid:
        out.say(str(report))
        out.field("valid", "false")
        return EXIT_VERDICT
    _write(args.output, render_svg(g, emb))
    out.say(f"svg written to {args.output}")
    out.field("svg", args.output)
    _save_figure(g, emb, args.png, f"{emb.pages} page(s)", out)
    return EXIT_OK


def cmd_mine(args, out: Output) -> int:
    members = mine_critical(args.n, args.k, max_n=_max_n(args))
    out.say(f"# {len(members)} member(s) of the {args.k}-page critical class with at most {args.n} vertices")
    out.field("count", len(members))
    gallery = []
    for i, g in enumerate(members, start=1):
        family = classify_M1(g)
        tag = family.value if family is not None else ("unidicyclic" if is_unidicyclic(g) else "other")
        out.say(f"# member {i}: {len(g.vertices)} vertices, {len(g.arcs)} arcs, {tag}")
        out.say(format_graph(g).rstrip())
        out.say("")
        out.field("member", f"{i} {tag} " + " ".join(f"{a.tail},{a.head}" for a in g.sorted_arcs()))
        if args.figures:
            gallery.append((g, obt(g, max_n=max(len(g.vertices), OBT_MAX_N)).witness, f"#{i} {tag}"))
    if args.figures:
        from .figures import save_gallery

        Path(args.figures).mkdir(parents=True, exist_ok=True)
        path = str(Path(args.figures) / f"critical_k{args.k}_n{args.n}.png")
        save_gallery(gallery, path)
        out.say(f"# figure written to {path}")
        out.field("figure", path)
    return EXIT_OK


def cmd_gen(args, out: Output) -> int:
    g = generate(args.shape, args.n, args.seed)
    text = f"# gen --shape {args.shape} --n {args.n} --seed {args.seed}\n" + format_graph(g)
    if args.output:
        _write(args.output, text)
        out.say(f"graph written to {args.output}")
        out.field("output", args.output)
    else:
        out.say(text.rstrip())
    out.field("vertices", len(g.vertices))
    out.field("arcs", len(g.arcs))
    return EXIT_OK


def cmd_recognize(args, out: Output) -> int:
    g = _read_graph(args.file, args.implicit_vertices)
    parts = components(g)
    shape = classify_shape(g).value if len(parts) == 1 else "Disconnected"
    out.say(f"shape: {shape}")
    out.field("shape", shape)
    family = classify_M1(g)
    out.say(f"1-page critical: {family.value if family else 'no'}")
    out.field("m1", family.value if family else "no")
    w = m1_witness(g)
    if w is not None:
        out.say(f"contains {w.family.value} at host vertices {[w.vertex_map[k] for k in sorted(w.vertex_map)]}")
        out.field("contains", w.family.value)
    if not is_unidicyclic(g):
        out.say("strictly uni-dicyclic: no")
        out.field("unidicyclic", "no")
        return EXIT_OK
    d = decompose_unidicyclic(g)
    out.say("strictly uni-dicyclic: yes")
    out.say("dicycle: " + " ".join(map(str, d.dicycle)))
    out.say("heavy: " + (" ".join(map(str, heavy_vertices(d))) or "none"))
    out.field("unidicyclic", "yes")
    out.field("dicycle", " ".join(map(str, d.dicycle)))
    out.field("heavy", " ".join(map(str, heavy_vertices(d))))
    found = False
    for name, detector in (("ClassT", detect_T), ("ClassI", detect_I), ("ClassR", detect_R)):
        witness = detector(d)
        out.field(name, "found" if witness else "none")
        if witness is not None:
            found = True
            out.say(witness.format().rstrip())
    if not found:
        out.say("no class T, I or R member: a 1-page embedding exists")
    return EXIT_VERDICT if found else EXIT_OK


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="obelisk", description="Oriented book embeddings of oriented graphs.")
    parser.add_argument("--version", action="version", version=f"obelisk {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, porcelain=True, implicit=True):
        if porcelain:
            p.add_argument("--porcelain", action="store_true", help="tab-separated key/value output")
        if implicit:
            p.add_argument("--implicit-vertices", action="store_true", help="let arcs introduce undeclared vertices")

    p = sub.add_parser("obt", help="exact oriented book thickness")
    p.add_argument("file")
    p.add_argument("--max-n", type=int, help="override the vertex-count guard")
    p.add_argument("--witness", metavar="PATH", help="write the witness embedding here")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for the spine-order sweep")
    p.add_argument("--figure", metavar="PNG", help="also draw the witness with matplotlib")
    common(p)
    p.set_defaults(func=cmd_obt)

    p = sub.add_parser("embed", help="construct an embedding")
    p.add_argument("file")
    p.add_argument("--method", choices=("exact", "auto"), default="auto")
    p.add_argument("-o", "--output", metavar="PATH", help="embedding file to write (stdout when omitted)")
    p.add_argument("--max-n", type=int, help="guard override for the exact fallback")
    p.add_argument("--figure", metavar="PNG")
    common(p)
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("verify", help="check an embedding against a graph")
    p.add_argument("graph")
    p.add_argument("embedding")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", help="draw an embedding as SVG")
    p.add_argument("graph")
    p.add_argument("embedding")
    p.add_argument("-o", "--output", required=True, metavar="SVG")
    p.add_argument("--png", metavar="PNG", help="also write a matplotlib rendering")
    common(p)
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("mine", help="list k-page critical graphs up to n vertices")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--max-n", type=int)
    p.add_argument("--figures", metavar="DIR", help="write a gallery of witness embeddings here")
    common(p, implicit=False)
    p.set_defaults(func=cmd_mine)

    p = sub.add_parser("gen", help="reproducible random instance")
    p.add_argument("--shape", choices=SHAPES, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("-o", "--output", metavar="PATH")
    common(p, implicit=False)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("recognize", help="structure report and forbidden-family detection")
    p.add_argument("file")
    common(p)
    p.set_defaults(func=cmd_recognize)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = Output(getattr(args, "porcelain", False))
    try:
        code = args.func(args, out)
    except SizeGuard as exc:
        out.flush()
        print(f"obelisk: size guard: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (GraphSyntaxError, NotSimple, UnknownVertex) as exc:
        out.flush()
        print(f"obelisk: parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ObeliskError, ValueError) as exc:
        out.flush()
        print(f"obelisk: {exc}", file=sys.stderr)
        return EXIT_USAGE
    out.flush()
    return code


if __name__ == "__main__":
    sys.exit(main())
