"""Brute-force reference implementations used to cross-check the finders.

Everything here is written as a literal, exhaustive restatement of the
counting rules, with no early exits and no code shared with the package.
"""

import math

DASH_PATTERNS = ("—", "--", " - ")


def dash_count(text):
    """Repeated find-first scan; resume after the dash character itself."""
    count = 0
    pos = 0
    while True:
        hits = []
        for pattern in DASH_PATTERNS:
            found = text.find(pattern, pos)
            if found != -1:
                hits.append((found, pattern))
        if not hits:
            return count
        found, pattern = min(hits)
        count += 1
        if pattern == "—":
            pos = found + 1
        elif pattern == "--":
            pos = found + 2
        else:  # " - ": the hyphen sits at found + 1
            pos = found + 2


def semicolon_count(text):
    return sum(1 for ch in text if ch == ";")


def _run_starts(keys):
    """Indices that begin a maximal run (length >= 2) of equal non-None keys."""
    starts = []
    for i in range(len(keys)):
        if keys[i] is None:
            continue
        if i + 1 < len(keys) and keys[i + 1] == keys[i]:
            if i == 0 or keys[i - 1] != keys[i]:
                starts.append(i)
    return starts


def initial_letter(word):
    if word == "" or word[0].isdigit():
        return None
    for ch in word:
        if ch.isalpha():
            return ch.lower()
    return None


def alliteration_count(word_lists):
    """word_lists: one list of word surfaces per sentence."""
    total = 0
    for words in word_lists:
        letters = [initial_letter(w) for w in words]
        total += len(_run_starts(letters))
    return total


def anaphora_count(word_lists):
    firsts = [w[0].lower() if w else None for w in word_lists]
    return len(_run_starts(firsts))


def epistrophe_count(word_lists):
    lasts = [w[-1].lower() if w else None for w in word_lists]
    return len(_run_starts(lasts))


def parallelism_count(tag_lists):
    """tag_lists: one list of word tags per sentence."""
    total = 0
    for tags in tag_lists:
        consumed = set()
        for n in (4, 3, 2, 1):
            # maximal stretches of unconsumed positions
            stretches = []
            current = []
            for pos in range(len(tags)):
                if pos in consumed:
                    if current:
                        stretches.append(current)
                    current = []
                else:
                    current.append(pos)
            if current:
                stretches.append(current)
            for stretch in stretches:
                grams = []
                for start in range(0, len(stretch) - n + 1, n):
                    grams.append(stretch[start : start + n])
                shapes = [tuple(tags[p] for p in g) for g in grams]
                i = 0
                while i < len(shapes):
                    j = i
                    while j + 1 < len(shapes) and shapes[j + 1] == shapes[i]:
                        j += 1
                    if j > i:
                        total += 1
                        for g in grams[i : j + 1]:
                            consumed.update(g)
                    i = j + 1
    return total


def rms_deviation(a_values, b_values):
    """Direct evaluation of the root-mean-square formula over six values."""
    assert len(a_values) == len(b_values) == 6
    squared = 0.0
    for x, y in zip(a_values, b_values):
        squared += (x - y) ** 2
    return math.sqrt(squared / 6.0)


def entropy_bits(probabilities):
    h = 0.0
    for p in probabilities:
        if p > 0:
            h -= p * math.log2(p)
    return h
