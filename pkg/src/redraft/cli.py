"""Command-line entry points: thin adapters over the library."""

import argparse
import json
import os
import socket
import sys

from .corpus import load_jsonl_corpus
from .service import BundleConfig, ModelStore, get_feedback, train_bundle


def _store(args):
    root = args.store or os.environ.get("REDRAFT_STORE", "./store")
    return ModelStore(root)


def cmd_train(args):
    corpus = load_jsonl_corpus(args.input)
    params = json.loads(args.params) if args.params else {}
    if args.seed is not None:
        params["seed"] = args.seed
    config = BundleConfig.from_dict(params)
    store = _store(args)
    version = store.next_version(args.corpus)
    bundle = train_bundle(args.corpus, corpus, config, version=version)
    store.publish(bundle, version=version)
    print(json.dumps({"corpus": args.corpus, "version": version, "status": "ready"}))
    return 0


def cmd_explain(args):
    store = _store(args)
    bundle = store.get(args.corpus)
    with open(args.file, encoding="utf-8") as fh:
        text = fh.read()
    report = get_feedback(bundle, text)
    print(json.dumps(report.to_json_dict(), indent=2, ensure_ascii=False))
    return 0


def cmd_segment(args):
    from .segmenting import topictiling_segment

    store = _store(args)
    bundle = store.get(args.model)
    with open(args.file, encoding="utf-8") as fh:
        text = fh.read()
    segments = topictiling_segment(
        text,
        bundle.resources.lda,
        bundle.resources.stopwords,
        window=args.window,
        depth_threshold=args.threshold,
    )
    print(
        json.dumps(
            [
                {
                    "startChar": s.start_char,
                    "endChar": s.end_char,
                    "text": s.text,
                    "topicDist": [float(x) for x in s.topic_dist],
                }
                for s in segments
            ],
            indent=2,
            ensure_ascii=False,
        )
    )
    return 0


def cmd_validate(args):
    from .ddl import BUILTIN_HOOKS, Catalog, ValidationContext, parse_ddl

    with open(args.ddl, encoding="utf-8") as fh:
        defs = parse_ddl(fh.read())
    catalog = Catalog()
    if args.catalog:
        for entry in os.listdir(args.catalog):
            if entry.endswith(".jsonl"):
                catalog.load_jsonl(entry[:-6], os.path.join(args.catalog, entry))
    ctx = ValidationContext(defs, hooks=BUILTIN_HOOKS, catalog=catalog)
    violations = ctx.validate_insert(args.table, json.loads(args.record))
    print(
        json.dumps(
            [
                {
                    "constraint": v.constraint_name,
                    "generic": v.generic_message,
                    "custom": v.custom_message,
                }
                for v in violations
            ],
            indent=2,
        )
    )
    return 1 if violations else 0


def cmd_serve(args):
    import uvicorn

    from .http_api import create_app, mount_static

    app = create_app(_store(args))
    ui_dir = args.ui or os.environ.get("REDRAFT_UI", "")
    if ui_dir and os.path.isdir(ui_dir):
        mount_static(app, ui_dir)
    sock = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
    sock.setsockopt(socket.SOL_SOCKET, socket.SO_REUSEADDR, 1)
    sock.bind((args.host, args.port))
    host, port = sock.getsockname()[:2]
    print(f"listening on http://{host}:{port}", flush=True)
    server = uvicorn.Server(uvicorn.Config(app, log_level="warning"))
    server.run(sockets=[sock])
    return 0


def cmd_bench_segment(args):
    from .segmenting import benchmark_segmenters, topictiling_segment
    from .textutil import sentence_spans

    store = _store(args)
    bundle = store.get(args.model)
    gold = []
    with open(args.gold, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if line:
                obj = json.loads(line)
                gold.append((obj["text"], list(obj["boundaries"])))

    def tiling(doc):
        segs = topictiling_segment(doc, bundle.resources.lda, bundle.resources.stopwords)
        out, acc = [], 0
        for s in segs[:-1]:
            acc += s.sentence_count
            out.append(acc)
        return out

    def flat(doc):
        return []

    def every_other(doc):
        n = len(sentence_spans(doc))
        return list(range(2, n, 2))

    report = benchmark_segmenters(
        [("topictiling", tiling), ("no-boundaries", flat), ("every-2", every_other)],
        gold,
        k=args.k,
    )
    print(json.dumps(report, indent=2))
    return 0


def cmd_mine_jargon(args):
    from .features import load_stopwords, mine_jargon
    from .textutil import tokenize

    corpus = load_jsonl_corpus(args.input)
    stop = load_stopwords()
    docs = [{t for t in tokenize(d.text) if t not in stop} for d in corpus.documents]
    mined = mine_jargon(docs, args.min_support, args.max_size)
    print(
        json.dumps(
            [{"terms": list(terms), "support": s} for terms, s in mined], indent=2
        )
    )
    return 0


def cmd_oracle_report(args):
    from .exact import agreement_report

    report = agreement_report(instances=args.instances, seed=args.seed)
    print(report.to_json())
    return 0


def build_parser():
    parser = argparse.ArgumentParser(prog="redraft")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("train", help="train and publish a corpus bundle")
    p.add_argument("--corpus", required=True)
    p.add_argument("--input", required=True, help="JSONL: {text, label, split?} per line")
    p.add_argument("--store")
    p.add_argument("--seed", type=int)
    p.add_argument("--params", help="JSON object of config overrides")
    p.set_defaults(fn=cmd_train)

    p = sub.add_parser("explain", help="feedback report for one document")
    p.add_argument("--corpus", required=True)
    p.add_argument("--file", required=True)
    p.add_argument("--store")
    p.set_defaults(fn=cmd_explain)

    p = sub.add_parser("segment", help="topic segmentation of one document")
    p.add_argument("--model", required=True, help="corpus bundle name")
    p.add_argument("--file", required=True)
    p.add_argument("--window", type=int, default=2)
    p.add_argument("--threshold", type=float, default=None)
    p.add_argument("--store")
    p.set_defaults(fn=cmd_segment)

    p = sub.add_parser("validate", help="validate a record against a DDL file")
    p.add_argument("--ddl", required=True)
    p.add_argument("--table", required=True)
    p.add_argument("--record", required=True, help="JSON object")
    p.add_argument("--catalog", help="directory of <table>.jsonl files")
    p.set_defaults(fn=cmd_validate)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--store")
    p.add_argument("--ui", help="directory of built UI assets to serve")
    p.set_defaults(fn=cmd_serve)

    p = sub.add_parser("bench-segment", help="rank segmenters on a gold corpus")
    p.add_argument("--model", required=True)
    p.add_argument("--gold", required=True, help="JSONL: {text, boundaries} per line")
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--store")
    p.set_defaults(fn=cmd_bench_segment)

    p = sub.add_parser("mine-jargon", help="frequent term sets from a corpus")
    p.add_argument("--input", required=True)
    p.add_argument("--min-support", type=float, default=0.2)
    p.add_argument("--max-size", type=int, default=2)
    p.set_defaults(fn=cmd_mine_jargon)

    p = sub.add_parser("oracle-report", help="heuristic vs exact-oracle agreement")
    p.add_argument("--instances", type=int, default=100)
    p.add_argument("--seed", type=int, default=7)
    p.set_defaults(fn=cmd_oracle_report)

    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except Exception as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
