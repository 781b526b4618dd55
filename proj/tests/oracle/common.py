"""Shared helpers for the oracle scripts.

Everything here is computed independently of the C++ implementation:
tag scanning is plain regex, statistics come from scipy/mpmath, and the
tokenizer classification tables are spelled out explicitly so that the
definition (not the code) is the shared contract.
"""

import re
from fractions import Fraction

FC_LABELS = ["time", "place", "manner", "cause", "effect", "condition", "purpose", "concession"]
SVO_LABELS = ["S", "V", "O"]
ALL_LABELS = FC_LABELS + SVO_LABELS

TAG_RE = re.compile(r"<(/?)([A-Za-z]+)>")


def parse_line(line):
    """Return the list of (label, text) chunks of a well-formed annotated line."""
    chunks = []
    pos = 0
    open_label = None
    open_end = 0
    for m in TAG_RE.finditer(line):
        closing, name = m.group(1) == "/", m.group(2)
        label = canonical_label(name)
        assert label is not None, f"unknown label {name!r} in {line!r}"
        if not closing:
            assert open_label is None, f"nested tag in {line!r}"
            open_label = label
            open_end = m.end()
        else:
            assert open_label == label, f"mismatched close in {line!r}"
            chunks.append((label, line[open_end:m.start()]))
            open_label = None
        pos = m.end()
    assert open_label is None, f"unclosed tag in {line!r}"
    return chunks


def canonical_label(name):
    low = name.lower()
    if low in FC_LABELS:
        return low
    up = name.upper()
    if up in SVO_LABELS:
        return up
    return None


def load_corpus(path):
    """[(line_no, raw, chunks)] for every line of the file."""
    out = []
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    for i, raw in enumerate(lines, start=1):
        out.append((i, raw, parse_line(raw)))
    return out


def visible_text(raw):
    return TAG_RE.sub("", raw)


# --- tokenizer classification (explicit tables; mirrors the documented definition) ---

def is_space(cp):
    return cp in (0x20, 0x09, 0x0A, 0x0B, 0x0C, 0x0D, 0xA0, 0x202F, 0x205F, 0x3000) or 0x2000 <= cp <= 0x200A


def is_punct(cp):
    if 0x21 <= cp <= 0x2F or 0x3A <= cp <= 0x40 or 0x5B <= cp <= 0x60 or 0x7B <= cp <= 0x7E:
        return True
    if cp == 0xB7:
        return True
    if 0x2010 <= cp <= 0x2027 or 0x2030 <= cp <= 0x205E:
        return True
    if 0x3001 <= cp <= 0x303F:
        return True
    if 0xFF01 <= cp <= 0xFF0F or 0xFF1A <= cp <= 0xFF20 or 0xFF3B <= cp <= 0xFF40 or 0xFF5B <= cp <= 0xFF65:
        return True
    return False


def tokenize(text, mode):
    toks = []
    if mode == "whitespace":
        cur = []
        for ch in text:
            cp = ord(ch)
            if is_space(cp) or is_punct(cp):
                if cur:
                    toks.append("".join(cur))
                    cur = []
            else:
                cur.append(ch)
        if cur:
            toks.append("".join(cur))
    elif mode == "cjk_char":
        for ch in text:
            cp = ord(ch)
            if not is_space(cp) and not is_punct(cp):
                toks.append(ch)
    else:
        raise ValueError(mode)
    return toks


def fold_ascii(tok):
    return "".join(chr(ord(c) + 32) if "A" <= c <= "Z" else c for c in tok)


def relative_positions(sentences, label):
    """[(line_no, Fraction)] for every chunk of `label`, index over all chunks."""
    out = []
    for line_no, _raw, chunks in sentences:
        n = len(chunks)
        if n == 0:
            continue
        for i, (lbl, _txt) in enumerate(chunks):
            if lbl == label:
                out.append((line_no, Fraction(1, 2) if n == 1 else Fraction(i, n - 1)))
    return out
