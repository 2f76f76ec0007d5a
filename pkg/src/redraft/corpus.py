"""Labeled text corpora and JSONL ingestion."""

import json
from dataclasses import dataclass, field


class CorpusError(ValueError):
    pass


@dataclass(frozen=True)
class Document:
    text: str
    label: str
    split: str = "train"


@dataclass
class LabeledCorpus:
    documents: list = field(default_factory=list)

    def __len__(self):
        return len(self.documents)

    def subset(self, split):
        return [d for d in self.documents if d.split == split]

    @property
    def labels(self):
        return sorted({d.label for d in self.documents})

    def require_trainable(self):
        train = self.subset("train")
        if not train:
            raise CorpusError("empty corpus")
        if len({d.label for d in train}) < 2:
            raise CorpusError("degenerate labels: need at least two distinct labels")
        return train


def load_jsonl_corpus(path):
    """One JSON object per line: {"text": ..., "label": ..., "split"?: ...}."""
    docs = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line:
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise CorpusError(f"{path}:{lineno}: invalid JSON ({exc})") from exc
            if "text" not in obj or "label" not in obj:
                raise CorpusError(f"{path}:{lineno}: missing text/label")
            docs.append(
                Document(str(obj["text"]), str(obj["label"]), str(obj.get("split", "train")))
            )
    return LabeledCorpus(docs)


def dump_jsonl_corpus(corpus, path):
    with open(path, "w", encoding="utf-8") as fh:
        for d in corpus.documents:
            fh.write(json.dumps({"text": d.text, "label": d.label, "split": d.split}))
            fh.write("\n")
