"""Hot integer kernels with two interchangeable backends.

Every kernel exists as a pure-numpy function (``*_np``) and a numba-compiled
loop (``*_nb``).  The public names are bound to the numba versions unless the
environment variable ``HECKEJONES_DISABLE_NUMBA`` is set to a non-empty value
other than ``0``, or numba cannot be imported.

All arithmetic is on int64 matrices reduced modulo a prime.  Callers keep the
modulus below 2**28 so that a dot product of length <= 16 cannot overflow.
"""

from __future__ import annotations

import os

import numpy as np

DISABLE_ENV = "HECKEJONES_DISABLE_NUMBA"
MAX_MODULUS = 1 << 28

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None


def numba_requested() -> bool:
    return os.environ.get(DISABLE_ENV, "") in ("", "0")


USE_NUMBA = numba is not None and numba_requested()


# -- numpy backend ------------------------------------------------------------


def matmul_mod_np(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Batched ``a @ b mod p``; ``b`` is either one matrix or a matching batch."""
    return np.matmul(a, b) % p


def encode_np(a: np.ndarray, p: int) -> np.ndarray:
    """Pack each k x k matrix with entries in [0, p) into one int64 (base p digits)."""
    flat = a.reshape(a.shape[0], -1)
    weights = p ** np.arange(flat.shape[1], dtype=np.int64)
    return flat @ weights


def decode_np(codes: np.ndarray, p: int, k: int) -> np.ndarray:
    codes = np.asarray(codes, dtype=np.int64)
    out = np.empty((codes.shape[0], k * k), dtype=np.int64)
    rest = codes.copy()
    for j in range(k * k):
        out[:, j] = rest % p
        rest //= p
    return out.reshape(-1, k, k)


_SEARCH_CHUNK = 2048


def search_identity_np(
    gens: np.ndarray, inverse: np.ndarray, prefix: np.ndarray, max_len: int, modulus: int
) -> list[tuple[int, ...]]:
    """Freely reduced words extending ``prefix`` (length <= max_len) whose product is I mod p.

    Letters are indices into ``gens``; ``inverse[a]`` is the index of the inverse letter.
    """
    n_letters, d, _ = gens.shape
    ident = np.eye(d, dtype=np.int64)
    m = ident.copy()
    for a in prefix:
        m = (m @ gens[a]) % modulus
    hits: list[tuple[int, ...]] = []
    plen = len(prefix)
    if plen == 0 or plen > max_len:
        return hits
    if np.array_equal(m, ident):
        hits.append(tuple(int(x) for x in prefix))
    letters = np.arange(n_letters)

    def expand(mats: np.ndarray, words: np.ndarray) -> None:
        depth = words.shape[1]
        if depth >= max_len:
            return
        for s in range(0, mats.shape[0], _SEARCH_CHUNK):
            cm = mats[s : s + _SEARCH_CHUNK]
            cw = words[s : s + _SEARCH_CHUNK]
            prod = np.matmul(cm[:, None], gens[None]) % modulus  # (N, L, d, d)
            keep = letters[None, :] != inverse[cw[:, -1]][:, None]
            rows, cols = np.nonzero(keep)
            new_m = prod[rows, cols]
            new_w = np.concatenate([cw[rows], cols[:, None]], axis=1)
            is_id = np.all(new_m == ident, axis=(1, 2))
            for w in new_w[is_id]:
                hits.append(tuple(int(x) for x in w))
            expand(new_m, new_w)

    expand(m[None], np.asarray(prefix, dtype=np.int64)[None])
    return hits


# -- numba backend -------------------------------------------------------------

if numba is not None:

    @numba.njit(cache=True, nogil=True)
    def matmul_mod_nb(a, b, p):
        n, k, _ = a.shape
        out = np.empty_like(a)
        for t in range(n):
            bt = b[t] if b.shape[0] > 1 else b[0]
            for i in range(k):
                for j in range(k):
                    acc = 0
                    for m in range(k):
                        acc += a[t, i, m] * bt[m, j]
                    out[t, i, j] = acc % p
        return out

    @numba.njit(cache=True, nogil=True)
    def encode_nb(a, p):
        n = a.shape[0]
        k = a.shape[1]
        out = np.empty(n, dtype=np.int64)
        for t in range(n):
            code = 0
            w = 1
            for i in range(k):
                for j in range(k):
                    code += a[t, i, j] * w
                    w *= p
            out[t] = code
        return out

    @numba.njit(cache=True, nogil=True)
    def decode_nb(codes, p, k):
        n = codes.shape[0]
        out = np.empty((n, k, k), dtype=np.int64)
        for t in range(n):
            rest = codes[t]
            for i in range(k):
                for j in range(k):
                    out[t, i, j] = rest % p
                    rest //= p
        return out

    @numba.njit(cache=True, nogil=True)
    def _search_identity_kernel(gens, inverse, prefix, max_len, modulus, capacity):
        n_letters = gens.shape[0]
        d = gens.shape[1]
        plen = prefix.shape[0]
        stack = np.zeros((max_len + 1, d, d), dtype=np.int64)
        for i in range(d):
            stack[0, i, i] = 1
        word = np.zeros(max_len, dtype=np.int64)
        hits = np.full((capacity, max_len), -1, dtype=np.int64)
        count = 0
        for k in range(plen):
            word[k] = prefix[k]
            a = prefix[k]
            for i in range(d):
                for j in range(d):
                    acc = 0
                    for m in range(d):
                        acc += stack[k, i, m] * gens[a, m, j]
                    stack[k + 1, i, j] = acc % modulus
        if plen == 0 or plen > max_len:
            return hits, count
        ident = True
        for i in range(d):
            for j in range(d):
                if stack[plen, i, j] != (1 if i == j else 0):
                    ident = False
        if ident:
            for k in range(plen):
                hits[0, k] = word[k]
            count = 1
        if plen == max_len:
            return hits, count
        choice = np.zeros(max_len + 1, dtype=np.int64)
        depth = plen
        while depth >= plen:
            a = choice[depth]
            if a >= n_letters:
                depth -= 1
                if depth >= plen:
                    choice[depth] += 1
                continue
            if depth > 0 and a == inverse[word[depth - 1]]:
                choice[depth] += 1
                continue
            word[depth] = a
            ident = True
            for i in range(d):
                for j in range(d):
                    acc = 0
                    for m in range(d):
                        acc += stack[depth, i, m] * gens[a, m, j]
                    v = acc % modulus
                    stack[depth + 1, i, j] = v
                    if v != (1 if i == j else 0):
                        ident = False
            if ident:
                if count < capacity:
                    for k in range(depth + 1):
                        hits[count, k] = word[k]
                count += 1
            if depth + 1 < max_len:
                depth += 1
                choice[depth] = 0
            else:
                choice[depth] += 1
        return hits, count

    def search_identity_nb(gens, inverse, prefix, max_len, modulus):
        gens = np.ascontiguousarray(gens, dtype=np.int64)
        inverse = np.ascontiguousarray(inverse, dtype=np.int64)
        prefix = np.ascontiguousarray(prefix, dtype=np.int64)
        capacity = 256
        while True:
            hits, count = _search_identity_kernel(gens, inverse, prefix, max_len, modulus, capacity)
            if count <= capacity:
                break
            capacity = 2 * count
        return [tuple(int(x) for x in row if x >= 0) for row in hits[:count]]

else:  # pragma: no cover
    matmul_mod_nb = encode_nb = decode_nb = search_identity_nb = None


def _matmul_mod_nb_entry(a, b, p):
    b = np.asarray(b, dtype=np.int64)
    if b.ndim == 2:
        b = b[None]
    return matmul_mod_nb(np.ascontiguousarray(a, dtype=np.int64), np.ascontiguousarray(b), p)


def _encode_nb_entry(a, p):
    return encode_nb(np.ascontiguousarray(a, dtype=np.int64), p)


def _decode_nb_entry(codes, p, k):
    return decode_nb(np.ascontiguousarray(codes, dtype=np.int64), p, k)


BACKENDS = {
    "numpy": {
        "matmul_mod": matmul_mod_np,
        "encode": encode_np,
        "decode": decode_np,
        "search_identity": search_identity_np,
    },
}
if numba is not None:
    BACKENDS["numba"] = {
        "matmul_mod": _matmul_mod_nb_entry,
        "encode": _encode_nb_entry,
        "decode": _decode_nb_entry,
        "search_identity": search_identity_nb,
    }

DEFAULT_BACKEND = "numba" if USE_NUMBA else "numpy"


def get_backend(name: str | None = None) -> dict:
    name = name or DEFAULT_BACKEND
    if name not in BACKENDS:
        raise ValueError(f"backend {name!r} unavailable; choose from {sorted(BACKENDS)}")
    return BACKENDS[name]


matmul_mod = BACKENDS[DEFAULT_BACKEND]["matmul_mod"]
encode = BACKENDS[DEFAULT_BACKEND]["encode"]
decode = BACKENDS[DEFAULT_BACKEND]["decode"]
search_identity = BACKENDS[DEFAULT_BACKEND]["search_identity"]
