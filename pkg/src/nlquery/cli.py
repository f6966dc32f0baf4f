"""Command-line interface. `query` and `repl` are thin clients of the HTTP
service (an in-process ASGI app by default, or a remote `--server` URL), so
the CLI and the service share one code path; `index` and `eval` operate on
the engine directly.

Exit codes: 0 ok, 2 I/O or configuration error, 3 query not understood.
"""

from __future__ import annotations

import asyncio
import sys

import click
import httpx
import uvicorn

from .config import Config, ConfigError, load_config
from .engine import SearchEngine
from .evaluation import GoldFileError, evaluate, load_gold_file
from .index import IoError as IndexIoError
from .index import build_index
from .service import create_app, triple_line

EXIT_OK = 0
EXIT_IO = 2
EXIT_NOT_UNDERSTOOD = 3


class QueryClient:
    """POSTs queries either to a remote service or to the in-process app."""

    def __init__(self, config: Config, server: str | None):
        self.server = server.rstrip("/") if server else None
        self._app = create_app(config) if server is None else None

    def post_query(self, text: str) -> dict:
        if self.server is not None:
            response = httpx.post(f"{self.server}/api/query",
                                  json={"query": text}, timeout=60.0)
            response.raise_for_status()
            return response.json()

        async def go() -> dict:
            transport = httpx.ASGITransport(app=self._app)
            async with httpx.AsyncClient(transport=transport,
                                         base_url="http://nlquery") as client:
                response = await client.post("/api/query", json={"query": text})
                response.raise_for_status()
                return response.json()

        return asyncio.run(go())


def _build_config(ctx: click.Context) -> Config:
    options = ctx.obj or {}
    try:
        return load_config(
            overrides={
                "corpus_path": options.get("corpus"),
                "vocab_path": options.get("vocab"),
                "lexicon_path": options.get("lexicon"),
                "source_root": options.get("source_root"),
                "service_port": options.get("port"),
            },
            config_file=options.get("config_file"),
        )
    except ConfigError as exc:
        raise click.exceptions.Exit(EXIT_IO) from _fail(str(exc))


def _fail(message: str) -> None:
    click.echo(f"error: {message}", err=True)


@click.group()
@click.option("--config", "config_file", type=click.Path(), default=None,
              help="JSON config file (or NLQUERY_CONFIG).")
@click.option("--corpus", type=click.Path(), default=None,
              help="Training corpus file (default: bundled).")
@click.option("--vocab", type=click.Path(), default=None,
              help="Vocabulary file (default: bundled).")
@click.option("--lexicon", type=click.Path(), default=None,
              help="POS lexicon file (default: bundled).")
@click.option("--source-root", type=click.Path(), default=None,
              help="Directory of .java sources (default: bundled sample).")
@click.pass_context
def main(ctx, config_file, corpus, vocab, lexicon, source_root):
    """Search source code with natural-language queries."""
    ctx.obj = {
        "config_file": config_file,
        "corpus": corpus,
        "vocab": vocab,
        "lexicon": lexicon,
        "source_root": source_root,
    }


@main.command("index")
@click.argument("source_root", type=click.Path())
@click.pass_context
def cmd_index(ctx, source_root):
    """Build the structural index and print a summary."""
    try:
        index = build_index(source_root)
    except (IndexIoError, OSError) as exc:
        _fail(str(exc))
        sys.exit(EXIT_IO)
    click.echo(f"indexed files: {index.report.files_indexed}")
    click.echo(f"indexed elements: {index.element_count()}")
    for key, entries in sorted(index.entries.items(),
                               key=lambda kv: (kv[0][0].value, kv[0][1].value)):
        click.echo(f"  {key[0].value}/{key[1].value}: {len(entries)}")
    if index.report.files_skipped:
        click.echo(f"skipped files: {len(index.report.files_skipped)}")
        for line in index.report.diagnostics:
            click.echo(f"  {line}")
    sys.exit(EXIT_OK)


def _print_response(data: dict, explain: bool) -> None:
    elected = data["elected"]
    click.echo(triple_line(elected["kind"], elected["context"], elected["identifier"]))
    if explain:
        click.echo(f"form: {data['form'] or '(none)'}  "
                   f"matching training queries: {data['match_count']}")
        click.echo("candidates:")
        for group in data["candidates"]:
            for cand in group["candidates"]:
                words = " ".join(cand["words"])
                click.echo(
                    f"  {group['parameter']:12s} '{words}'  "
                    f"p={cand['probability']:g} ({cand['fraction']})  {cand['source']}"
                )
        click.echo("trace:")
        for line in data["trace"]:
            click.echo(f"  {line}")
    if data["status"] != "UNDERSTOOD":
        click.echo("query not understood", err=True)
        if not explain:
            for line in data["trace"]:
                if "no matching grammatical form" in line or "no noun" in line:
                    click.echo(f"  {line}", err=True)
        return
    if data.get("search_error"):
        click.echo(f"search not executed: {data['search_error']}", err=True)
        return
    for r in data["results"]:
        click.echo(f"{r['file']}:{r['line']}:{r['column']}  "
                   f"{r['kind']}/{r['context']}  {r['name']}  {r['snippet'].strip()}")
    if data["truncated"]:
        click.echo("(results truncated)")


@main.command("query")
@click.argument("text")
@click.option("--explain", is_flag=True, help="Show candidates and the rule trace.")
@click.option("--server", default=None, help="Query a running service instead.")
@click.pass_context
def cmd_query(ctx, text, explain, server):
    """Translate TEXT and run the code search."""
    config = _build_config(ctx)
    try:
        client = QueryClient(config, server)
        data = client.post_query(text)
    except (httpx.HTTPError, OSError) as exc:
        _fail(str(exc))
        sys.exit(EXIT_IO)
    _print_response(data, explain)
    sys.exit(EXIT_OK if data["status"] == "UNDERSTOOD" else EXIT_NOT_UNDERSTOOD)


@main.command("repl")
@click.option("--explain", is_flag=True, help="Show candidates and the rule trace.")
@click.option("--server", default=None, help="Query a running service instead.")
@click.pass_context
def cmd_repl(ctx, explain, server):
    """Interactive query loop (:q to quit)."""
    config = _build_config(ctx)
    client = QueryClient(config, server)
    click.echo("nlquery repl; :q quits")
    while True:
        try:
            text = input("nlquery> ").strip()
        except (EOFError, KeyboardInterrupt):
            click.echo("")
            break
        if not text:
            continue
        if text in (":q", ":quit", ":exit"):
            break
        try:
            data = client.post_query(text)
        except (httpx.HTTPError, OSError) as exc:
            _fail(str(exc))
            continue
        _print_response(data, explain)
    sys.exit(EXIT_OK)


@main.command("eval")
@click.argument("gold", type=click.Path(), required=False)
@click.option("--quiet", is_flag=True, help="Only print the summary lines.")
@click.pass_context
def cmd_eval(ctx, gold, quiet):
    """Score the translator against a gold set of expected triples."""
    config = _build_config(ctx)
    gold_path = gold or config.resolved_gold_path()
    try:
        entries = load_gold_file(gold_path)
    except GoldFileError as exc:
        _fail(str(exc))
        sys.exit(EXIT_IO)
    engine = SearchEngine(config)
    report = evaluate(entries, engine.translate)
    if not quiet:
        for verdict in report.per_query:
            actual = " ".join(verdict.actual) if verdict.actual else "-"
            click.echo(f"[{verdict.label:14s}] {verdict.query}  ->  {actual}")
    click.echo(f"understood: {report.understood}/{report.total} "
               f"({report.understood_rate:.1%})")
    click.echo(f"correct: {report.correct}/{report.total} ({report.correct_rate:.1%})")
    click.echo(f"correct among understood: {report.correct_given_understood:.1%}")
    click.echo(report.summary_line())
    sys.exit(EXIT_OK)


@main.command("serve")
@click.option("--port", type=int, default=None, help="Port (default 8000).")
@click.option("--host", default="127.0.0.1", show_default=True)
@click.pass_context
def cmd_serve(ctx, port, host):
    """Run the HTTP service."""
    ctx.obj["port"] = port
    config = _build_config(ctx)
    app = create_app(config)
    uvicorn.run(app, host=host, port=config.service_port)


if __name__ == "__main__":
    main()
