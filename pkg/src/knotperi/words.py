"""Words over the region generators X_0 .. X_{n+1}.

A letter is a nonzero int: ``+(i+1)`` stands for X_i and ``-(i+1)`` for
X_i^-1 (the offset keeps generator 0 representable).  A word is a tuple
of letters.  Keeping letters as plain ints makes the rewriting loops and
the brute-force oracle cheap.
"""

from __future__ import annotations

import re

Letter = int
Word = tuple  # tuple[Letter, ...]

EMPTY: Word = ()


def letter(generator: int, sign: int = 1) -> Letter:
    if generator < 0:
        raise ValueError(f"negative generator index {generator}")
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    return sign * (generator + 1)


def generator(l: Letter) -> int:
    return abs(l) - 1


def sign(l: Letter) -> int:
    return 1 if l > 0 else -1


def inverse(w) -> Word:
    """Group inverse: reverse the word and flip every sign."""
    return tuple(-l for l in reversed(w))


def word(*letters: Letter) -> Word:
    return tuple(letters)


_TOKEN = re.compile(r"X(\d+)(\^-1)?$")


class WordSyntaxError(ValueError):
    pass


def parse_word(text: str) -> Word:
    """Parse the CLI word format, e.g. ``"X1 X2^-1 X0"``."""
    out = []
    for tok in text.split():
        m = _TOKEN.match(tok)
        if not m:
            raise WordSyntaxError(f"bad word token {tok!r} (expected X<k> or X<k>^-1)")
        out.append(letter(int(m.group(1)), -1 if m.group(2) else 1))
    return tuple(out)


def format_word(w) -> str:
    return " ".join(
        f"X{generator(l)}" if l > 0 else f"X{generator(l)}^-1" for l in w
    )


def word_to_json(w) -> list:
    return [{"g": generator(l), "s": sign(l)} for l in w]
