import numpy as np
from hypothesis import given, settings, strategies as st

from ulogic import _fallback, kernels
from ulogic import po2dfa as pd
from ulogic.difftest import gen_po2dfa
from ulogic.sexpr import Alphabet, enumerate_words

ABC = Alphabet("abc")
WORDS = list(enumerate_words(ABC, 4))


def test_backend_selected():
    assert kernels.BACKEND in ("cython", "python")


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.integers(3, 8))
def test_backends_agree(seed, k):
    m = gen_po2dfa(k, ABC, seed)
    _, idx, rows, kinds, table, np_kinds = m._tables()
    flat, offsets = [], [0]
    for w in WORDS:
        flat.extend(m.encode(w))
        offsets.append(len(flat))
    ref = _fallback.batch_member(rows, kinds, idx[m.init], flat, offsets)
    got = kernels.batch_member(table, np_kinds, idx[m.init], np.array(flat, dtype=np.int32), np.array(offsets, dtype=np.int64))
    assert list(ref) == list(got)
    for w in WORDS[:40]:
        codes = m.encode(w)
        assert _fallback.run_table(rows, kinds, idx[m.init], codes, 1, 10**6)[0] == int(pd.run(m, w).verdict == "Accept")
