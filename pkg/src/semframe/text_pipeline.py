"""Raw text -> cleaned, stemmed sentence token sequences.

Documents are reduced to lists of sentences, each a list of lowercase
stems. Punctuation, symbols, hyperlinks and digit-bearing tokens are
discarded; stopwords are removed except for whitelisted negations; the
surviving tokens are Porter-stemmed. All functions are pure, so corpora
can be processed in parallel and merged by document id.
"""

from __future__ import annotations

import csv
import json
import re
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .errors import ConfigError, DataError
from .porter import porter_stem

__all__ = [
    "Document",
    "TokenizedDocument",
    "PipelineConfig",
    "load_stopwords",
    "clean_and_tokenize",
    "tokenize_corpus",
    "read_corpus",
    "porter_stem",
]

_SENTENCE_SPLIT = re.compile(r"[.!?\r\n]+")
_NON_ALNUM = re.compile(r"[^0-9a-zA-ZÀ-ɏ]+")
_DIGIT = re.compile(r"[0-9]")

# clitic fragments produced by splitting a contraction on its apostrophe
_CLITICS = frozenset({"t", "s", "re", "ve", "ll", "d", "m"})


@dataclass(frozen=True)
class Document:
    """One raw text unit (a note, a post)."""

    id: str
    text: str
    corpus_label: str = ""


@dataclass(frozen=True)
class TokenizedDocument:
    """A document as ordered sentences of ordered stems."""

    id: str
    sentences: tuple[tuple[str, ...], ...]

    def tokens(self) -> list[str]:
        return [t for sent in self.sentences for t in sent]


def load_stopwords(path: str | Path) -> frozenset[str]:
    """Read a stopword file: one word per line, '#' comments allowed."""
    words = set()
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            words.add(line.lower())
    return frozenset(words)


def _bundled_stopwords() -> frozenset[str]:
    text = resources.files("semframe").joinpath("data/stopwords.txt").read_text("utf-8")
    return frozenset(
        line.strip().lower()
        for line in text.splitlines()
        if line.strip() and not line.startswith("#")
    )


@dataclass(frozen=True)
class PipelineConfig:
    stopword_list: frozenset[str] = field(default_factory=_bundled_stopwords)
    negation_whitelist: frozenset[str] = frozenset({"no", "not"})
    lowercase: bool = True

    @property
    def effective_stopwords(self) -> frozenset[str]:
        # the negation whitelist always wins
        return self.stopword_list - self.negation_whitelist


def _clean_token(raw: str, lowercase: bool) -> str | None:
    """Normalize one whitespace-delimited token; None means dropped."""
    tok = raw.lower() if lowercase else raw
    tok = tok.replace("’", "'")
    if "'" in tok:
        parts = [p for p in tok.split("'") if p]
        if not parts:
            return None
        if len(parts) > 1 and parts[-1] in _CLITICS:
            head = "".join(parts[:-1])
            # n't contractions: "don't" -> "do", "isn't" -> "is"
            if parts[-1] == "t" and head.endswith("n"):
                head = head[:-1]
            tok = head
        else:
            tok = "".join(parts)
    tok = _NON_ALNUM.sub("", tok)
    if not tok:
        return None
    if _DIGIT.search(tok):
        return None
    if tok.startswith(("http", "www")):
        return None
    return tok


def clean_and_tokenize(doc: Document, cfg: PipelineConfig | None = None) -> TokenizedDocument:
    """Split into sentences, clean tokens, filter stopwords, stem.

    Sentences split on . ! ? and newlines; empty sentences are dropped.
    Negation words in the whitelist survive stopword filtering.
    """
    cfg = cfg or PipelineConfig()
    stopwords = cfg.effective_stopwords
    sentences = []
    for chunk in _SENTENCE_SPLIT.split(doc.text):
        sent = []
        for raw in chunk.split():
            tok = _clean_token(raw, cfg.lowercase)
            if tok is None or tok in stopwords:
                continue
            sent.append(porter_stem(tok))
        if sent:
            sentences.append(tuple(sent))
    return TokenizedDocument(id=doc.id, sentences=tuple(sentences))


def tokenize_corpus(docs: list[Document], cfg: PipelineConfig | None = None) -> list[TokenizedDocument]:
    cfg = cfg or PipelineConfig()
    return [clean_and_tokenize(d, cfg) for d in docs]


def _check_unique(ids: list[str], source: str) -> None:
    seen = set()
    for i in ids:
        if i in seen:
            raise DataError(f"{source}: duplicate document id {i!r}")
        seen.add(i)


def read_txt_dir(path: str | Path, label: str) -> list[Document]:
    """One document per *.txt file; the file name is the document id."""
    root = Path(path)
    if not root.is_dir():
        raise DataError(f"{root}: not a directory")
    docs = []
    for p in sorted(root.glob("*.txt")):
        try:
            text = p.read_text(encoding="utf-8")
        except UnicodeDecodeError as e:
            raise DataError(f"document {p.name}: invalid UTF-8 ({e})") from e
        docs.append(Document(id=p.name, text=text, corpus_label=label))
    _check_unique([d.id for d in docs], str(root))
    return docs


def read_jsonl(path: str | Path, label: str) -> list[Document]:
    """JSON-lines corpus with {"id": ..., "text": ...} objects."""
    p = Path(path)
    docs = []
    try:
        lines = p.read_text(encoding="utf-8").splitlines()
    except UnicodeDecodeError as e:
        raise DataError(f"{p}: invalid UTF-8 ({e})") from e
    except OSError as e:
        raise DataError(f"{p}: {e}") from e
    for n, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as e:
            raise DataError(f"{p}:{n}: invalid JSON ({e})") from e
        if not isinstance(obj, dict) or "id" not in obj or "text" not in obj:
            raise DataError(f"{p}:{n}: expected object with 'id' and 'text'")
        docs.append(Document(id=str(obj["id"]), text=str(obj["text"]), corpus_label=label))
    _check_unique([d.id for d in docs], str(p))
    return docs


def read_csv(path: str | Path, label: str) -> list[Document]:
    """CSV corpus with header columns id,text."""
    p = Path(path)
    try:
        with open(p, newline="", encoding="utf-8") as fh:
            reader = csv.DictReader(fh)
            if reader.fieldnames is None or not {"id", "text"} <= set(reader.fieldnames):
                raise DataError(f"{p}: header must contain 'id' and 'text' columns")
            docs = [
                Document(id=row["id"], text=row["text"], corpus_label=label)
                for row in reader
            ]
    except UnicodeDecodeError as e:
        raise DataError(f"{p}: invalid UTF-8 ({e})") from e
    except OSError as e:
        raise DataError(f"{p}: {e}") from e
    _check_unique([d.id for d in docs], str(p))
    return docs


_READERS = {"txt": read_txt_dir, "jsonl": read_jsonl, "csv": read_csv}


def read_corpus(path: str | Path, fmt: str, label: str) -> list[Document]:
    try:
        reader = _READERS[fmt]
    except KeyError:
        raise ConfigError(f"unknown corpus format {fmt!r}; expected one of {sorted(_READERS)}")
    return reader(path, label)
