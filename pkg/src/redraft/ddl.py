"""Constraint and feedback declarations for crowd-sourced tables.

A small recursive-descent parser for the dialect:

    CREATE CROWD TABLE name (
      col type [UNIQUE] [PRIMARY KEY] [CHECK <expr>],
      CHECK (<expr>),
      QUALITY SCORE name udf(col),
      FOREIGN KEY col REF table(col)
    );
    CREATE FEATURE TABLE name ( key type PRIMARY KEY REFERENCES t.col, feat FEATURE extractor, ... );
    CREATE EXPLANATION [func] ON table(att, ...) FOR constraint USING explainer;
    CREATE INTERFACE ON table(att) USING "widget" FROM "file.js" [AND explainer];

Check expressions support comparisons, AND/OR, parentheses, and
`column matches <regex>`. Unnamed constraints get default names of the form
<table>_<attribute>_<kind>. Validation reports every violated constraint in
declaration order, each with a database-style generic message and, when an
explanation is bound, the explainer's custom message as well.
"""

import json
import re
from dataclasses import dataclass, field


class DdlError(ValueError):
    pass


class DdlSyntaxError(DdlError):
    def __init__(self, message, line, column):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class DdlResolutionError(DdlError):
    pass


# --- AST ----------------------------------------------------------------------

@dataclass(frozen=True)
class Col:
    name: str


@dataclass(frozen=True)
class Lit:
    value: object


@dataclass(frozen=True)
class Cmp:
    op: str
    left: object
    right: object


@dataclass(frozen=True)
class Bool:
    op: str  # "AND" | "OR"
    left: object
    right: object


@dataclass(frozen=True)
class Matches:
    column: str
    pattern: str


@dataclass
class Column:
    name: str
    type: str  # int | text | autoincrement
    unique: bool = False
    primary_key: bool = False


@dataclass
class CheckConstraint:
    name: str
    expr: object
    columns: list
    auto_named: bool = True


@dataclass
class UniqueConstraint:
    name: str
    column: str


@dataclass
class ForeignKey:
    name: str
    column: str
    ref_table: str
    ref_column: str


@dataclass
class QualityScore:
    name: str
    column: str
    scorer: str


@dataclass
class CrowdTableDef:
    name: str
    columns: list = field(default_factory=list)
    checks: list = field(default_factory=list)
    uniques: list = field(default_factory=list)
    foreign_keys: list = field(default_factory=list)
    quality_scores: list = field(default_factory=list)
    declaration_order: list = field(default_factory=list)

    def column(self, name):
        for c in self.columns:
            if c.name == name:
                return c
        return None

    def constraint_names(self):
        return (
            [c.name for c in self.checks]
            + [u.name for u in self.uniques]
            + [f.name for f in self.foreign_keys]
        )

    def ordered_constraints(self):
        """Violation report order follows the source declaration order."""
        return self.declaration_order or (self.checks + self.uniques + self.foreign_keys)


@dataclass
class FeatureEntry:
    feature: str
    extractor: str


@dataclass
class FeatureTableDef:
    name: str
    key_column: str
    key_type: str
    references: str  # "table.column"
    entries: list = field(default_factory=list)


@dataclass
class ExplanationBinding:
    table: str
    attributes: list
    constraint_name: str
    explainer: str
    func_name: str = ""


@dataclass
class InterfaceBinding:
    table: str
    attribute: str
    widget: str
    source_file: str
    explainer: str = ""


@dataclass(frozen=True)
class Violation:
    constraint_name: str
    attributes: tuple
    offending_values: tuple
    generic_message: str
    custom_message: str = None


# --- lexer ----------------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<string>"[^"]*"|'[^']*')
  | (?P<number>-?\d+(\.\d+)?)
  | (?P<ident>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<op><=|>=|!=|<>|=|<|>)
  | (?P<sym>[(),.;])
    """,
    re.VERBOSE,
)

_RAW_RE = re.compile(r"[^\s,();]+")


@dataclass(frozen=True)
class Token:
    kind: str
    value: str
    line: int
    column: int


class Lexer:
    """Tokenizer with a raw mode for regex patterns after `matches`."""

    def __init__(self, source):
        self.source = source
        self.pos = 0
        self.line = 1
        self.col = 1

    def _advance(self, text):
        for ch in text:
            if ch == "\n":
                self.line += 1
                self.col = 1
            else:
                self.col += 1
        self.pos += len(text)

    def next(self, raw=False):
        while True:
            if self.pos >= len(self.source):
                return Token("eof", "", self.line, self.col)
            if raw:
                m = _RAW_RE.match(self.source, self.pos)
                if m is None:
                    ws = re.match(r"\s+", self.source[self.pos :])
                    if ws:
                        self._advance(ws.group())
                        continue
                    raise DdlSyntaxError("expected pattern", self.line, self.col)
                tok = Token("raw", m.group(), self.line, self.col)
                self._advance(m.group())
                return tok
            m = _TOKEN_RE.match(self.source, self.pos)
            if m is None:
                raise DdlSyntaxError(
                    f"unexpected character {self.source[self.pos]!r}", self.line, self.col
                )
            kind = m.lastgroup
            if kind == "ws":
                self._advance(m.group())
                continue
            tok = Token(kind, m.group(), self.line, self.col)
            self._advance(m.group())
            return tok


class Parser:
    def __init__(self, source):
        self.lexer = Lexer(source)
        self.tok = self.lexer.next()

    def _advance(self, raw=False):
        self.tok = self.lexer.next(raw=raw)

    def error(self, message):
        at = self.tok.value or "EOF"
        raise DdlSyntaxError(f"{message}, got {at!r}", self.tok.line, self.tok.column)

    def at_keyword(self, word):
        return self.tok.kind == "ident" and self.tok.value.upper() == word

    def expect_keyword(self, word):
        if not self.at_keyword(word):
            self.error(f"expected {word}")
        self._advance()

    def expect(self, kind, value=None):
        if self.tok.kind != kind or (value is not None and self.tok.value != value):
            self.error(f"expected {value or kind}")
        v = self.tok.value
        self._advance()
        return v

    def ident(self):
        if self.tok.kind != "ident":
            self.error("expected identifier")
        v = self.tok.value
        self._advance()
        return v

    # --- statements -------------------------------------------------------

    def parse(self):
        defs = []
        while self.tok.kind != "eof":
            self.expect_keyword("CREATE")
            if self.at_keyword("CROWD"):
                defs.append(self._crowd_table())
            elif self.at_keyword("FEATURE"):
                defs.append(self._feature_table())
            elif self.at_keyword("EXPLANATION"):
                defs.append(self._explanation())
            elif self.at_keyword("INTERFACE"):
                defs.append(self._interface())
            else:
                self.error("expected CROWD, FEATURE, EXPLANATION or INTERFACE")
            if self.tok.kind == "sym" and self.tok.value == ";":
                self._advance()
        return defs

    def _crowd_table(self):
        self.expect_keyword("CROWD")
        self.expect_keyword("TABLE")
        table = CrowdTableDef(name=self.ident())
        order = []
        self.expect("sym", "(")
        while True:
            if self.at_keyword("CHECK"):
                self._advance()
                chk = self._register_check(table, self._expr())
                order.append(chk)
            elif self.at_keyword("QUALITY"):
                self._advance()
                self.expect_keyword("SCORE")
                name = self.ident()
                scorer = self.ident()
                self.expect("sym", "(")
                col = self.ident()
                self.expect("sym", ")")
                table.quality_scores.append(QualityScore(name=name, column=col, scorer=scorer))
            elif self.at_keyword("FOREIGN"):
                self._advance()
                self.expect_keyword("KEY")
                col = self.ident()
                if self.at_keyword("REF") or self.at_keyword("REFERENCES"):
                    self._advance()
                else:
                    self.error("expected REF")
                ref_table = self.ident()
                self.expect("sym", "(")
                ref_col = self.ident()
                self.expect("sym", ")")
                fk = ForeignKey(
                    name=f"{table.name}_{col}_fkey",
                    column=col,
                    ref_table=ref_table,
                    ref_column=ref_col,
                )
                table.foreign_keys.append(fk)
                order.append(fk)
            else:
                order.extend(self._column_def(table))
            if self.tok.kind == "sym" and self.tok.value == ",":
                self._advance()
                continue
            break
        self.expect("sym", ")")
        table.declaration_order = order
        return table

    def _column_def(self, table):
        name = self.ident()
        order = []
        if self.at_keyword("AUTOINCREMENT"):
            self._advance()
            ctype = "autoincrement"
        elif self.at_keyword("INT") or self.at_keyword("INTEGER"):
            self._advance()
            ctype = "int"
        elif self.at_keyword("TEXT"):
            self._advance()
            ctype = "text"
        else:
            self.error("expected column type (int, text, autoincrement)")
        col = Column(name=name, type=ctype)
        table.columns.append(col)
        while True:
            if self.at_keyword("UNIQUE"):
                self._advance()
                col.unique = True
                uq = UniqueConstraint(name=f"{table.name}_{name}_unique", column=name)
                table.uniques.append(uq)
                order.append(uq)
            elif self.at_keyword("PRIMARY"):
                self._advance()
                self.expect_keyword("KEY")
                col.primary_key = True
            elif self.at_keyword("CHECK"):
                self._advance()
                order.append(self._register_check(table, self._expr()))
            else:
                break
        return order

    def _register_check(self, table, expr):
        cols = sorted(expr_columns(expr))
        anchor = cols[0] if cols else table.name
        base = f"{table.name}_{anchor}_domain"
        name = base
        ordinal = 2
        while name in table.constraint_names():
            name = f"{base}_{ordinal}"
            ordinal += 1
        chk = CheckConstraint(name=name, expr=expr, columns=cols)
        table.checks.append(chk)
        return chk

    def _feature_table(self):
        self.expect_keyword("FEATURE")
        self.expect_keyword("TABLE")
        ft = FeatureTableDef(name=self.ident(), key_column="", key_type="", references="")
        self.expect("sym", "(")
        # key column: name type primary key references t.col
        ft.key_column = self.ident()
        ft.key_type = self.ident()
        self.expect_keyword("PRIMARY")
        self.expect_keyword("KEY")
        self.expect_keyword("REFERENCES")
        t = self.ident()
        self.expect("sym", ".")
        c = self.ident()
        ft.references = f"{t}.{c}"
        while self.tok.kind == "sym" and self.tok.value == ",":
            self._advance()
            if self.tok.kind == "sym" and self.tok.value == ")":
                break
            feat = self.ident()
            self.expect_keyword("FEATURE")
            ft.entries.append(FeatureEntry(feature=feat, extractor=self.ident()))
        self.expect("sym", ")")
        return ft

    def _explanation(self):
        self.expect_keyword("EXPLANATION")
        func_name = ""
        if self.tok.kind == "ident" and not self.at_keyword("ON"):
            func_name = self.ident()
        self.expect_keyword("ON")
        table = self.ident()
        self.expect("sym", "(")
        attrs = [self.ident()]
        while self.tok.kind == "sym" and self.tok.value == ",":
            self._advance()
            attrs.append(self.ident())
        self.expect("sym", ")")
        self.expect_keyword("FOR")
        constraint = self.ident()
        self.expect_keyword("USING")
        explainer = self.ident()
        return ExplanationBinding(
            table=table,
            attributes=attrs,
            constraint_name=constraint,
            explainer=explainer,
            func_name=func_name,
        )

    def _interface(self):
        self.expect_keyword("INTERFACE")
        self.expect_keyword("ON")
        table = self.ident()
        self.expect("sym", "(")
        attr = self.ident()
        self.expect("sym", ")")
        self.expect_keyword("USING")
        widget = self.expect("string").strip("\"'")
        self.expect_keyword("FROM")
        source = self.expect("string").strip("\"'")
        explainer = ""
        if self.at_keyword("AND"):
            self._advance()
            explainer = self.ident()
        return InterfaceBinding(
            table=table, attribute=attr, widget=widget, source_file=source, explainer=explainer
        )

    # --- expressions --------------------------------------------------------

    def _expr(self):
        left = self._and_expr()
        while self.at_keyword("OR"):
            self._advance()
            left = Bool("OR", left, self._and_expr())
        return left

    def _and_expr(self):
        left = self._comparison()
        while self.at_keyword("AND"):
            self._advance()
            left = Bool("AND", left, self._comparison())
        return left

    def _comparison(self):
        if self.tok.kind == "sym" and self.tok.value == "(":
            self._advance()
            inner = self._expr()
            self.expect("sym", ")")
            return inner
        left = self._operand()
        if self.at_keyword("MATCHES"):
            if not isinstance(left, Col):
                self.error("matches requires a column on the left")
            self.tok = self.lexer.next(raw=True)
            pattern = self.tok.value
            self._advance()
            return Matches(column=left.name, pattern=pattern)
        if self.tok.kind != "op":
            self.error("expected comparison operator")
        op = self.tok.value
        self._advance()
        return Cmp(op="!=" if op == "<>" else op, left=left, right=self._operand())

    def _operand(self):
        if self.tok.kind == "number":
            v = self.tok.value
            self._advance()
            return Lit(float(v) if "." in v else int(v))
        if self.tok.kind == "string":
            v = self.tok.value.strip("\"'")
            self._advance()
            return Lit(v)
        if self.tok.kind == "ident":
            return Col(self.ident())
        self.error("expected value or column")


def parse_ddl(source):
    """Parse a DDL script and resolve cross-references.

    Raises DdlSyntaxError with position info on malformed input; duplicate
    table names and explanation bindings onto unknown tables/constraints are
    resolution errors. Foreign keys may reference tables defined elsewhere
    (they are checked against the catalog at validation time).
    """
    defs = Parser(source).parse()
    tables = {}
    for d in defs:
        if isinstance(d, (CrowdTableDef, FeatureTableDef)):
            if d.name in tables:
                raise DdlResolutionError(f"duplicate table {d.name}")
            tables[d.name] = d
    for d in defs:
        if isinstance(d, ExplanationBinding):
            target = tables.get(d.table)
            if target is None:
                raise DdlResolutionError(f"explanation references unknown table {d.table}")
            if isinstance(target, CrowdTableDef):
                if d.constraint_name not in target.constraint_names() and not any(
                    q.name == d.constraint_name for q in target.quality_scores
                ):
                    raise DdlResolutionError(
                        f"explanation references unknown constraint {d.constraint_name}"
                    )
    return defs


def expr_columns(expr):
    if isinstance(expr, Col):
        return {expr.name}
    if isinstance(expr, Lit):
        return set()
    if isinstance(expr, Cmp):
        return expr_columns(expr.left) | expr_columns(expr.right)
    if isinstance(expr, Bool):
        return expr_columns(expr.left) | expr_columns(expr.right)
    if isinstance(expr, Matches):
        return {expr.column}
    raise TypeError(f"unknown expression node {expr!r}")


# --- evaluation -------------------------------------------------------------

_OPS = {
    "=": lambda a, b: a == b,
    "!=": lambda a, b: a != b,
    "<": lambda a, b: a < b,
    "<=": lambda a, b: a <= b,
    ">": lambda a, b: a > b,
    ">=": lambda a, b: a >= b,
}


def eval_expr(expr, record):
    if isinstance(expr, Lit):
        return expr.value
    if isinstance(expr, Col):
        return record[expr.name]
    if isinstance(expr, Cmp):
        return _OPS[expr.op](eval_expr(expr.left, record), eval_expr(expr.right, record))
    if isinstance(expr, Bool):
        a = eval_expr(expr.left, record)
        return (a and eval_expr(expr.right, record)) if expr.op == "AND" else (
            a or eval_expr(expr.right, record)
        )
    if isinstance(expr, Matches):
        return re.fullmatch(expr.pattern, str(record[expr.column])) is not None
    raise TypeError(f"unknown expression node {expr!r}")


# --- canonical printer --------------------------------------------------------

def print_expr(expr):
    if isinstance(expr, Lit):
        if isinstance(expr.value, str):
            return f"'{expr.value}'"
        return repr(expr.value) if isinstance(expr.value, float) else str(expr.value)
    if isinstance(expr, Col):
        return expr.name
    if isinstance(expr, Cmp):
        return f"{print_expr(expr.left)} {expr.op} {print_expr(expr.right)}"
    if isinstance(expr, Bool):
        def side(e):
            txt = print_expr(e)
            return f"({txt})" if isinstance(e, Bool) and e.op != expr.op else txt

        return f"{side(expr.left)} {expr.op} {side(expr.right)}"
    if isinstance(expr, Matches):
        return f"{expr.column} matches {expr.pattern}"
    raise TypeError(f"unknown expression node {expr!r}")


def print_ddl(defs):
    """Canonical form: parse(print_ddl(parse(src))) == parse(src)."""
    out = []
    for d in defs:
        if isinstance(d, CrowdTableDef):
            lines = []
            for c in d.columns:
                mods = ""
                if c.unique:
                    mods += " UNIQUE"
                if c.primary_key:
                    mods += " PRIMARY KEY"
                lines.append(f"  {c.name} {c.type}{mods}")
            for chk in d.checks:
                lines.append(f"  CHECK ({print_expr(chk.expr)})")
            for q in d.quality_scores:
                lines.append(f"  QUALITY SCORE {q.name} {q.scorer}({q.column})")
            for fk in d.foreign_keys:
                lines.append(f"  FOREIGN KEY {fk.column} REF {fk.ref_table}({fk.ref_column})")
            out.append(f"CREATE CROWD TABLE {d.name} (\n" + ",\n".join(lines) + "\n);")
        elif isinstance(d, FeatureTableDef):
            t, c = d.references.split(".")
            lines = [f"  {d.key_column} {d.key_type} PRIMARY KEY REFERENCES {t}.{c}"]
            lines += [f"  {e.feature} FEATURE {e.extractor}" for e in d.entries]
            out.append(f"CREATE FEATURE TABLE {d.name} (\n" + ",\n".join(lines) + "\n);")
        elif isinstance(d, ExplanationBinding):
            fn = f" {d.func_name}" if d.func_name else ""
            attrs = ", ".join(d.attributes)
            out.append(
                f"CREATE EXPLANATION{fn} ON {d.table}({attrs})\n"
                f"FOR {d.constraint_name} USING {d.explainer};"
            )
        elif isinstance(d, InterfaceBinding):
            tail = f" AND {d.explainer}" if d.explainer else ""
            out.append(
                f'CREATE INTERFACE ON {d.table}({d.attribute})\n'
                f'USING "{d.widget}" FROM "{d.source_file}"{tail};'
            )
    return "\n".join(out) + "\n"


# --- catalog and validation -----------------------------------------------------

class Catalog:
    """In-memory table store with JSONL persistence, one file per table."""

    def __init__(self):
        self.tables = {}

    def rows(self, table):
        return self.tables.get(table, [])

    def insert(self, table, record):
        self.tables.setdefault(table, []).append(dict(record))

    def load_jsonl(self, table, path):
        rows = []
        with open(path, encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if line:
                    rows.append(json.loads(line))
        self.tables[table] = rows

    def dump_jsonl(self, table, path):
        with open(path, "w", encoding="utf-8") as fh:
            for row in self.rows(table):
                fh.write(json.dumps(row, sort_keys=True))
                fh.write("\n")


def _coerced(record, table):
    out = {}
    for col in table.columns:
        if col.type == "autoincrement":
            continue
        if col.name not in record:
            raise DdlError(f"record missing attribute {col.name}")
        out[col.name] = record[col.name]
    for key in record:
        if table.column(key) is None:
            raise DdlError(f"unknown attribute {key}")
    return out


class ValidationContext:
    """Tables, explanation bindings, and executable explainer hooks."""

    def __init__(self, defs, hooks=None, catalog=None):
        self.tables = {d.name: d for d in defs if isinstance(d, CrowdTableDef)}
        self.feature_tables = {d.name: d for d in defs if isinstance(d, FeatureTableDef)}
        self.explanations = [d for d in defs if isinstance(d, ExplanationBinding)]
        self.interfaces = [d for d in defs if isinstance(d, InterfaceBinding)]
        self.hooks = dict(hooks or {})
        self.catalog = catalog if catalog is not None else Catalog()

    def binding_for(self, table, constraint_name):
        for b in self.explanations:
            if b.table == table and b.constraint_name == constraint_name:
                return b
        return None

    def custom_message(self, table, constraint, attrs, values, generic):
        binding = self.binding_for(table.name, constraint.name)
        if binding is None:
            return None
        hook = self.hooks.get(binding.explainer)
        if hook is None:
            return None
        pairs = list(zip(attrs, values))
        try:
            return hook(pairs, generic, constraint)
        except Exception:
            return None

    def validate_insert(self, table_name, record):
        """All violations for the record, in constraint declaration order."""
        table = self.tables.get(table_name)
        if table is None:
            raise DdlError(f"unknown table {table_name}")
        record = _coerced(record, table)
        violations = []
        for constraint in table.ordered_constraints():
            v = self._check_one(table, constraint, record)
            if v is not None:
                violations.append(v)
        return violations

    def _check_one(self, table, constraint, record):
        if isinstance(constraint, CheckConstraint):
            attrs = tuple(constraint.columns)
            values = tuple(record[a] for a in attrs)
            try:
                ok = bool(eval_expr(constraint.expr, record))
            except TypeError:
                ok = False
            if ok:
                return None
            generic = (
                f'new row for relation "{table.name}" violates check constraint '
                f'"{constraint.name}" ({print_expr(constraint.expr)})'
            )
        elif isinstance(constraint, UniqueConstraint):
            attrs = (constraint.column,)
            values = (record[constraint.column],)
            clash = any(
                row.get(constraint.column) == record[constraint.column]
                for row in self.catalog.rows(table.name)
            )
            if not clash:
                return None
            generic = (
                f'duplicate key value violates unique constraint "{constraint.name}": '
                f"{constraint.column} already exists"
            )
        else:  # ForeignKey: text keys compare case-insensitively
            attrs = (constraint.column,)
            values = (record[constraint.column],)
            value = record[constraint.column]
            needle = value.lower() if isinstance(value, str) else value
            found = False
            for row in self.catalog.rows(constraint.ref_table):
                other = row.get(constraint.ref_column)
                other = other.lower() if isinstance(other, str) else other
                if other == needle:
                    found = True
                    break
            if found:
                return None
            generic = (
                f'insert or update on table "{table.name}" violates foreign key '
                f'constraint "{constraint.name}": {constraint.column} not present in '
                f'"{constraint.ref_table}"'
            )
        custom = self.custom_message(table, constraint, attrs, values, generic)
        return Violation(
            constraint_name=constraint.name,
            attributes=attrs,
            offending_values=values,
            generic_message=generic,
            custom_message=custom,
        )


# --- built-in explainer hooks -----------------------------------------------------

def _int_bounds(expr, column):
    """Satisfying integer range implied by a conjunctive comparison check."""
    lo, hi = None, None

    def walk(e):
        nonlocal lo, hi
        if isinstance(e, Bool) and e.op == "AND":
            walk(e.left)
            walk(e.right)
            return
        if not isinstance(e, Cmp):
            return
        col_left = isinstance(e.left, Col) and e.left.name == column and isinstance(e.right, Lit)
        col_right = isinstance(e.right, Col) and e.right.name == column and isinstance(e.left, Lit)
        if not (col_left or col_right):
            return
        op, bound = e.op, (e.right.value if col_left else e.left.value)
        if col_right:  # flip to column-on-left orientation
            op = {"<": ">", "<=": ">=", ">": "<", ">=": "<="}.get(op, op)
        if not isinstance(bound, (int, float)):
            return
        if op == ">":
            lo = max(lo, int(bound) + 1) if lo is not None else int(bound) + 1
        elif op == ">=":
            lo = max(lo, int(bound)) if lo is not None else int(bound)
        elif op == "<":
            hi = min(hi, int(bound) - 1) if hi is not None else int(bound) - 1
        elif op == "<=":
            hi = min(hi, int(bound)) if hi is not None else int(bound)

    walk(expr)
    return lo, hi


def numeric_exp(pairs, generic, constraint=None):
    att = pairs[0][0]
    if constraint is not None and isinstance(constraint, CheckConstraint):
        lo, hi = _int_bounds(constraint.expr, att)
        if lo is not None and hi is not None:
            return f"{att} must be between {lo} and {hi}"
        if lo is not None:
            return f"{att} must be at least {lo}"
        if hi is not None:
            return f"{att} must be at most {hi}"
    return f"{att} has an invalid value"


def unique_exp(pairs, generic, constraint=None):
    att, val = pairs[0]
    return f"The {att} '{val}' is already taken, please pick another"


def product_exp(pairs, generic, constraint=None):
    att, val = pairs[0]
    return f"We could not find '{val}'; please pick an existing {att}"


BUILTIN_HOOKS = {
    "numeric_exp": numeric_exp,
    "unique_exp": unique_exp,
    "product_exp": product_exp,
}
