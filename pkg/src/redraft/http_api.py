"""HTTP surface over the model store, validation context, and pipeline.

Request bodies are parsed by hand where the wire contract promises specific
status codes: malformed JSON is 400, unknown corpora and tables are 404.
Feedback responses are serialized with fixed separators and key order, so
identical (bundle, text) pairs produce byte-identical bodies.
"""

import io
import json

from fastapi import BackgroundTasks, FastAPI, File, Form, Request, UploadFile
from fastapi.responses import Response
from fastapi.staticfiles import StaticFiles

from .corpus import CorpusError, Document, LabeledCorpus
from .ddl import BUILTIN_HOOKS, DdlError, ValidationContext, parse_ddl
from .service import BundleConfig, ServiceError, UnknownCorpusError, get_feedback, train_bundle

DEMO_DDL = """
CREATE CROWD TABLE users (
  id autoincrement primary key,
  username text UNIQUE,
  age int CHECK age > 0 AND age < 100,
  CHECK(username matches \\w+)
);
CREATE CROWD TABLE reviews(
  id autoincrement primary key,
  product_id text,
  rating int CHECK rating > 0 AND rating <= 5,
  review text,
  QUALITY SCORE qualreview qual_udf(review),
  FOREIGN KEY product_id REF products(id)
);
CREATE EXPLANATION ON reviews(rating)
FOR reviews_rating_domain USING numeric_exp;
CREATE EXPLANATION ON users(age)
FOR users_age_domain USING numeric_exp;
CREATE EXPLANATION ON users(username)
FOR users_username_unique USING unique_exp;
CREATE EXPLANATION ON reviews(product_id)
FOR reviews_product_id_fkey USING product_exp;
CREATE INTERFACE ON reviews(rating)
USING "stars" FROM "interfaces.js"
AND numeric_exp;
CREATE INTERFACE ON reviews(product_id)
USING "autocomplete" FROM "interfaces.js"
AND product_exp;
"""

DEMO_PRODUCTS = [
    "ThinkPad X1 Carbon",
    "MacBook Air M2",
    "Dell XPS 13",
    "HP Spectre x360",
    "Asus ZenBook 14",
    "Acer Swift 3",
    "Framework Laptop 13",
]


def demo_validation_context():
    ctx = ValidationContext(parse_ddl(DEMO_DDL), hooks=BUILTIN_HOOKS)
    for name in DEMO_PRODUCTS:
        ctx.catalog.insert("products", {"id": name})
    return ctx


def _json_response(obj, status_code=200):
    return Response(
        content=json.dumps(obj, separators=(",", ":"), ensure_ascii=False),
        media_type="application/json",
        status_code=status_code,
    )


def _error(status_code, message):
    return _json_response({"error": message}, status_code=status_code)


async def _parse_body(request):
    try:
        return json.loads(await request.body())
    except (json.JSONDecodeError, UnicodeDecodeError):
        return None


def create_app(store, validation=None):
    app = FastAPI(title="redraft", docs_url=None, redoc_url=None)
    validation = validation or demo_validation_context()
    training_status = {}

    @app.post("/feedback")
    async def feedback(request: Request):
        body = await _parse_body(request)
        if not isinstance(body, dict) or "corpus" not in body or "text" not in body:
            return _error(400, "expected JSON body {corpus, text}")
        if not isinstance(body["text"], str):
            return _error(400, "text must be a string")
        try:
            bundle = store.get(body["corpus"], body.get("version"))
        except UnknownCorpusError:
            return _error(404, f"unknown corpus {body['corpus']!r}")
        report = get_feedback(bundle, body["text"])
        return _json_response(report.to_json_dict())

    @app.post("/validate")
    async def validate(request: Request):
        body = await _parse_body(request)
        if not isinstance(body, dict) or "table" not in body or "record" not in body:
            return _error(400, "expected JSON body {table, record}")
        table = body["table"]
        if table not in validation.tables:
            return _error(404, f"unknown table {table!r}")
        try:
            violations = validation.validate_insert(table, body["record"])
        except DdlError as exc:
            return _error(400, str(exc))
        return _json_response(
            {
                "violations": [
                    {
                        "constraint": v.constraint_name,
                        "attributes": list(v.attributes),
                        "values": list(v.offending_values),
                        "generic": v.generic_message,
                        "custom": v.custom_message,
                    }
                    for v in violations
                ]
            }
        )

    def _run_training(name, corpus, config, version):
        try:
            bundle = train_bundle(name, corpus, config, version=version)
            store.publish(bundle, version=version)
            training_status[name] = {"status": "ready", "version": version}
        except Exception as exc:  # surfaced via /models, not a crashed worker
            training_status[name] = {"status": "failed", "error": str(exc)}

    @app.post("/train", status_code=202)
    async def train(
        background: BackgroundTasks,
        corpus: str = Form(...),
        params: str = Form("{}"),
        documents: UploadFile = File(...),
    ):
        try:
            config = BundleConfig.from_dict(json.loads(params))
        except (json.JSONDecodeError, ServiceError, TypeError) as exc:
            return _error(400, f"bad params: {exc}")
        docs = []
        raw = (await documents.read()).decode("utf-8")
        for lineno, line in enumerate(io.StringIO(raw), 1):
            line = line.strip()
            if not line:
                continue
            try:
                obj = json.loads(line)
                docs.append(
                    Document(str(obj["text"]), str(obj["label"]), str(obj.get("split", "train")))
                )
            except (json.JSONDecodeError, KeyError):
                return _error(400, f"bad JSONL at line {lineno}")
        if not docs:
            return _error(400, "no documents uploaded")
        try:
            LabeledCorpus(docs).require_trainable()
        except CorpusError as exc:
            return _error(400, str(exc))
        version = store.next_version(corpus)
        training_status[corpus] = {"status": "training", "version": version}
        background.add_task(_run_training, corpus, LabeledCorpus(docs), config, version)
        return _json_response({"corpus": corpus, "version": version, "status": "training"}, 202)

    @app.get("/models")
    async def models():
        return _json_response({"models": store.describe(), "training": training_status})

    @app.get("/catalog/{table}")
    async def catalog(table: str, prefix: str = ""):
        rows = validation.catalog.rows(table)
        if table not in validation.tables and not rows:
            return _error(404, f"unknown table {table!r}")
        needle = prefix.lower()
        matches = []
        for row in rows:
            for value in row.values():
                if isinstance(value, str) and value.lower().startswith(needle):
                    matches.append(value)
                    break
        return _json_response({"matches": sorted(matches)})

    return app


def mount_static(app, directory):
    app.mount("/", StaticFiles(directory=directory, html=True), name="ui")
