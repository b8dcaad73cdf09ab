"""Text preprocessing: tokenize, drop stopwords and short tokens, stem.

A :class:`TokenPipeline` is a pure function of its configuration. Stemming
is pluggable: "none", or "light-suffix", a replaceable longest-suffix
rewrite table applied to a fixpoint. The stopword and length filters run
before stemming and are re-applied to the stemmed token, so the output
never contains a stopword or a token shorter than the floor.
"""

import re
from dataclasses import dataclass, field
from importlib import resources

from .errors import ConfigError, DataError

# Unicode alphanumerics; underscores split like punctuation. Digit-only
# tokens survive.
_TOKEN_RE = re.compile(r"[^\W_]+", re.UNICODE)

STEMMERS = ("none", "light-suffix")

# A stem is never rewritten below this length; keeps the suffix table from
# eating short roots.
_MIN_STEM_LEN = 3

# Rewrites per token are bounded so a user-supplied table with a rewrite
# cycle cannot hang the pipeline.
_MAX_REWRITES = 50


def parse_stopwords(lines):
    """One token per line, '#' starts a comment, blank lines ignored."""
    words = set()
    for line in lines:
        word = line.split("#", 1)[0].strip().lower()
        if word:
            words.add(word)
    return frozenset(words)


def load_stopwords(path):
    with open(path, encoding="utf-8") as fh:
        return parse_stopwords(fh)


def parse_suffix_table(lines, origin="<suffix table>"):
    """Lines of the form ``suffix→replacement`` (replacement may be empty).

    Longer suffixes take precedence; equal-length ties resolve
    lexicographically so the table order in the file does not matter.
    """
    rules = []
    for lineno, line in enumerate(lines, 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if "→" not in line:
            raise DataError(f"{origin}:{lineno}: expected 'suffix→replacement'")
        suffix, replacement = line.split("→", 1)
        suffix = suffix.strip()
        replacement = replacement.strip()
        if not suffix:
            raise DataError(f"{origin}:{lineno}: empty suffix")
        rules.append((suffix, replacement))
    rules.sort(key=lambda rule: (-len(rule[0]), rule[0]))
    return tuple(rules)


def load_suffix_table(path):
    with open(path, encoding="utf-8") as fh:
        return parse_suffix_table(fh, origin=str(path))


def bundled_stopwords():
    text = resources.files("pulrec").joinpath("data/stopwords.txt").read_text("utf-8")
    return parse_stopwords(text.splitlines())


def bundled_suffix_table():
    text = resources.files("pulrec").joinpath("data/suffixes.txt").read_text("utf-8")
    return parse_suffix_table(text.splitlines(), origin="data/suffixes.txt")


@dataclass(frozen=True)
class TokenPipeline:
    stopwords: frozenset = frozenset()
    stemmer: str = "none"
    min_token_len: int = 2
    suffix_rules: tuple = ()

    def __post_init__(self):
        if self.stemmer not in STEMMERS:
            raise ConfigError(f"unknown stemmer {self.stemmer!r}; choose from {STEMMERS}")
        if self.min_token_len < 1:
            raise ConfigError("min_token_len must be >= 1")
        object.__setattr__(
            self, "stopwords", frozenset(w.lower() for w in self.stopwords)
        )
        if self.stemmer == "light-suffix" and not self.suffix_rules:
            object.__setattr__(self, "suffix_rules", bundled_suffix_table())

    def stem(self, token):
        """Apply the longest matching suffix rule until no rule matches."""
        if self.stemmer == "none":
            return token
        for _ in range(_MAX_REWRITES):
            for suffix, replacement in self.suffix_rules:
                if (
                    len(token) > len(suffix)
                    and token.endswith(suffix)
                    and len(token) - len(suffix) + len(replacement) >= _MIN_STEM_LEN
                ):
                    rewritten = token[: len(token) - len(suffix)] + replacement
                    break
            else:
                return token
            if rewritten == token:
                return token
            token = rewritten
        return token

    def preprocess(self, text):
        """Lowercase, split on non-alphanumerics, filter, stem. Order-preserving."""
        out = []
        for raw in _TOKEN_RE.findall(text.lower()):
            if len(raw) < self.min_token_len or raw in self.stopwords:
                continue
            token = self.stem(raw)
            if len(token) < self.min_token_len or token in self.stopwords:
                continue
            out.append(token)
        return out
