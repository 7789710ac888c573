"""Permutations of {1..n} in one-line notation (tuples)."""
from functools import lru_cache
from itertools import permutations as _perms


def identity(n):
    return tuple(range(1, n + 1))


def is_permutation(w):
    return sorted(w) == list(range(1, len(w) + 1))


@lru_cache(maxsize=None)
def length(w):
    """Number of inversions."""
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def inverse(w):
    out = [0] * len(w)
    for i, x in enumerate(w):
        out[x - 1] = i + 1
    return tuple(out)


def compose(a, b):
    """``(a b)(i) = a(b(i))``."""
    return tuple(a[x - 1] for x in b)


def right_swap(w, i):
    """``w s_i``: swap positions i and i+1 (1-based)."""
    return w[: i - 1] + (w[i], w[i - 1]) + w[i + 1:]


def left_swap(w, i):
    """``s_i w``: swap the values i and i+1."""
    return tuple(i + 1 if x == i else i if x == i + 1 else x for x in w)


@lru_cache(maxsize=None)
def reduced_word(w):
    """Lexicographically smallest reduced word (generator indices, 1-based)."""
    word = []
    w = tuple(w)
    pos = inverse(w)
    while True:
        for i in range(1, len(w)):
            if pos[i - 1] > pos[i]:
                break
        else:
            return tuple(word)
        word.append(i)
        w = left_swap(w, i)
        pos = inverse(w)


def from_word(n, word):
    w = identity(n)
    for i in word:
        w = right_swap(w, i)
    return w


def transposition(n, i, j):
    w = list(range(1, n + 1))
    w[i - 1], w[j - 1] = j, i
    return tuple(w)


def longest(k, n):
    """Longest element of S_k inside S_n."""
    return tuple(range(k, 0, -1)) + tuple(range(k + 1, n + 1))


def embed(w, n):
    return tuple(w) + tuple(range(len(w) + 1, n + 1))


def all_perms(n):
    return [tuple(p) for p in _perms(range(1, n + 1))]


def first_right_descent(w):
    for i in range(len(w) - 1):
        if w[i] > w[i + 1]:
            return i + 1
    return None
