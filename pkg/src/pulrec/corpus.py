"""Document collection: loading, synthetic generation, cohort filtering, splits.

A corpus is a list of initiatives; each initiative maps every participant
to one merged document (multiple speeches by the same MP in the same
initiative concatenate on load). Ground truth for evaluation is membership:
an initiative is relevant exactly to its participants.
"""

import json
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import ConfigError, CorpusError, DataError, EmptyCohortError
from .seeds import fold_seed


@dataclass(frozen=True)
class Initiative:
    id: str
    documents: dict  # mp id -> merged intervention text, insertion-ordered

    @property
    def participants(self):
        return frozenset(self.documents)

    def merged_text(self):
        """All speeches of the initiative as one document, in speaker order."""
        return " ".join(self.documents.values())


@dataclass(frozen=True)
class Corpus:
    initiatives: tuple
    mps: frozenset = field(init=False)

    def __post_init__(self):
        seen = set()
        for initiative in self.initiatives:
            if initiative.id in seen:
                raise CorpusError(f"duplicate initiative id {initiative.id!r}")
            seen.add(initiative.id)
            if not initiative.documents:
                raise CorpusError(f"initiative {initiative.id!r} has no participants")
        mps = frozenset(mp for ini in self.initiatives for mp in ini.documents)
        object.__setattr__(self, "mps", mps)

    def __len__(self):
        return len(self.initiatives)

    def participation_counts(self):
        """Number of initiatives each MP participates in."""
        counts = {}
        for initiative in self.initiatives:
            for mp in initiative.documents:
                counts[mp] = counts.get(mp, 0) + 1
        return counts


def load_corpus(path, format="jsonl"):
    """Read line-delimited records {"mp", "initiative", "text"} into a Corpus.

    Interventions with the same (mp, initiative) merge into one document,
    texts joined by a single space in file order. Blank lines are skipped.
    """
    if format != "jsonl":
        raise CorpusError(f"unsupported corpus format {format!r}")
    merged = {}  # initiative id -> {mp -> [texts]}
    order = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            if not line.strip():
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError as exc:
                raise CorpusError(f"{path}: line {lineno}: invalid JSON ({exc.msg})") from exc
            if not isinstance(record, dict):
                raise CorpusError(f"{path}: line {lineno}: record is not an object")
            for key in ("mp", "initiative", "text"):
                if key not in record:
                    raise CorpusError(f"{path}: line {lineno}: missing field {key!r}")
                if not isinstance(record[key], str):
                    raise CorpusError(f"{path}: line {lineno}: field {key!r} is not a string")
            if not record["text"].strip():
                raise CorpusError(f"{path}: line {lineno}: empty text")
            init_id = record["initiative"]
            if init_id not in merged:
                merged[init_id] = {}
                order.append(init_id)
            merged[init_id].setdefault(record["mp"], []).append(record["text"])
    if not order:
        raise CorpusError(f"{path}: empty corpus")
    initiatives = tuple(
        Initiative(init_id, {mp: " ".join(texts) for mp, texts in merged[init_id].items()})
        for init_id in order
    )
    return Corpus(initiatives)


def save_corpus(corpus, path):
    """Write a Corpus back out as jsonl, one record per (initiative, mp)."""
    with open(path, "w", encoding="utf-8") as fh:
        for initiative in corpus.initiatives:
            for mp, text in initiative.documents.items():
                record = {"mp": mp, "initiative": initiative.id, "text": text}
                fh.write(json.dumps(record, ensure_ascii=False) + "\n")


def filter_min_interventions(corpus, min_k):
    """Keep only MPs participating in at least min_k initiatives.

    Documents of removed MPs are dropped; initiatives left without
    participants are dropped. Idempotent: retained MPs keep all their
    initiatives, so their counts do not change.
    """
    if min_k < 1:
        raise ValueError("min_k must be >= 1")
    counts = corpus.participation_counts()
    keep = {mp for mp, n in counts.items() if n >= min_k}
    if not keep:
        raise EmptyCohortError(f"no MPs participate in at least {min_k} initiatives")
    initiatives = []
    for initiative in corpus.initiatives:
        documents = {mp: text for mp, text in initiative.documents.items() if mp in keep}
        if documents:
            initiatives.append(Initiative(initiative.id, documents))
    return Corpus(tuple(initiatives))


@dataclass(frozen=True)
class Split:
    fold_index: int
    train: frozenset
    test: frozenset
    seed: int


def repeated_holdout(corpus, folds=5, train_fraction=0.8, master_seed=0):
    """Independent uniform train/test partitions of the initiative ids.

    Fold f draws from seed = master_seed XOR (f * fixed odd constant), see
    :mod:`pulrec.seeds`. The train size is round-half-up of
    train_fraction * N. Ids are sorted before shuffling so splits do not
    depend on file order.
    """
    n = len(corpus)
    if n < 5:
        raise DataError(f"need at least 5 initiatives to split, got {n}")
    if folds < 1:
        raise ConfigError("folds must be >= 1")
    if not 0.0 < train_fraction < 1.0:
        raise ConfigError("train_fraction must be strictly between 0 and 1")
    ids = np.array(sorted(initiative.id for initiative in corpus.initiatives))
    n_train = int(math.floor(train_fraction * n + 0.5))
    if n_train == 0 or n_train == n:
        raise DataError(f"train_fraction {train_fraction} leaves an empty side for {n} initiatives")
    splits = []
    for f in range(folds):
        seed = fold_seed(master_seed, f)
        rng = np.random.default_rng(seed)
        perm = rng.permutation(n)
        train = frozenset(ids[perm[:n_train]].tolist())
        test = frozenset(ids[perm[n_train:]].tolist())
        splits.append(Split(f, train, test, seed))
    return splits


@dataclass(frozen=True)
class SyntheticSpec:
    n_topics: int
    n_mps: int
    topics_per_mp: int
    initiatives_per_mp: int
    vocab_size_per_topic: int
    shared_vocab_size: int
    doc_length: int
    noise_fraction: float
    seed: int

    def validate(self):
        if self.n_topics < 1:
            raise ConfigError("synthetic spec: n_topics must be >= 1")
        if self.n_mps < 1:
            raise ConfigError("synthetic spec: n_mps must be >= 1")
        if not 1 <= self.topics_per_mp <= self.n_topics:
            raise ConfigError("synthetic spec: topics_per_mp must be in [1, n_topics]")
        if self.initiatives_per_mp < 1:
            raise ConfigError("synthetic spec: initiatives_per_mp must be >= 1")
        if self.vocab_size_per_topic < 1:
            raise ConfigError("synthetic spec: vocab_size_per_topic must be >= 1")
        if self.shared_vocab_size < 0:
            raise ConfigError("synthetic spec: shared_vocab_size must be >= 0")
        if not 0.0 <= self.noise_fraction <= 1.0:
            raise ConfigError("synthetic spec: noise_fraction must be in [0, 1]")
        if self.noise_fraction > 0.0 and self.shared_vocab_size == 0:
            raise ConfigError("synthetic spec: noise_fraction > 0 needs shared_vocab_size >= 1")
        if self.doc_length < 1:
            raise ConfigError("synthetic spec: doc_length must be >= 1")


@dataclass(frozen=True)
class SyntheticCorpus:
    corpus: Corpus
    mp_topics: dict  # mp id -> tuple of topic indices
    initiative_topics: dict  # initiative id -> the topic its participants share


def generate_synthetic(spec):
    """Generate a topic-structured corpus with known ground-truth labels.

    Each topic owns a disjoint term block; a shared block supplies noise
    tokens. Every MP gets a fixed topic set and exactly
    ``initiatives_per_mp`` participations. Initiatives group 1-3 MPs that
    share the initiative's topic. Each document token comes from the shared
    block with probability noise_fraction, otherwise uniformly from the
    author's topic blocks.
    """
    spec.validate()
    rng = np.random.default_rng(spec.seed)

    topic_terms = [
        [f"t{t}w{j}" for j in range(spec.vocab_size_per_topic)]
        for t in range(spec.n_topics)
    ]
    shared_terms = [f"shw{j}" for j in range(spec.shared_vocab_size)]

    width = max(2, len(str(spec.n_mps - 1)))
    mp_ids = [f"mp{i:0{width}d}" for i in range(spec.n_mps)]
    mp_topics = {}
    mp_term_pool = {}
    for mp in mp_ids:
        topics = tuple(
            sorted(rng.choice(spec.n_topics, size=spec.topics_per_mp, replace=False).tolist())
        )
        mp_topics[mp] = topics
        mp_term_pool[mp] = [term for t in topics for term in topic_terms[t]]

    def draw_document(mp):
        pool = mp_term_pool[mp]
        tokens = []
        for _ in range(spec.doc_length):
            if spec.noise_fraction > 0.0 and rng.random() < spec.noise_fraction:
                tokens.append(shared_terms[rng.integers(len(shared_terms))])
            else:
                tokens.append(pool[rng.integers(len(pool))])
        return " ".join(tokens)

    remaining = {mp: spec.initiatives_per_mp for mp in mp_ids}
    initiatives = []
    initiative_topics = {}
    counter = 0
    while True:
        active = [mp for mp in mp_ids if remaining[mp] > 0]
        if not active:
            break
        seed_mp = active[rng.integers(len(active))]
        topic = mp_topics[seed_mp][rng.integers(len(mp_topics[seed_mp]))]
        group_size = int(rng.integers(1, 4))
        candidates = [
            mp for mp in active if mp != seed_mp and topic in mp_topics[mp]
        ]
        participants = [seed_mp]
        n_extra = min(group_size - 1, len(candidates))
        if n_extra > 0:
            chosen = rng.choice(len(candidates), size=n_extra, replace=False)
            participants.extend(candidates[i] for i in sorted(chosen.tolist()))
        init_id = f"init{counter:05d}"
        counter += 1
        documents = {mp: draw_document(mp) for mp in participants}
        initiatives.append(Initiative(init_id, documents))
        initiative_topics[init_id] = int(topic)
        for mp in participants:
            remaining[mp] -= 1
    corpus = Corpus(tuple(initiatives))
    return SyntheticCorpus(corpus, mp_topics, initiative_topics)
