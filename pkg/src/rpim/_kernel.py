"""JIT-compiled twin of the pure-Python compressor hot path.

compress() dispatches here when numba is importable.  The kernel mirrors
build_sequence_array + replace_step branch for branch: same greedy
non-overlap counting, same (count desc, pair asc) extraction order, same
chain batching and run-head repair, so both engines emit identical
grammars and the test suite pins that equivalence on random inputs.

Layout differences are purely mechanical.  Pair records live in flat
int64 arrays indexed through one open-addressing hash table (linear
probing, backward-shift deletion) because numba's typed.Dict costs
several times more per operation than a hand-rolled table here.  A pair
counted once is a record with count 1, standing in for the reference
implementation's seen-once side table.  The per-count bucket queue
collapses into a single array heap ordered by (count desc, code asc);
entries carry the same stamps and go stale the same way, so extraction
picks the exact pair the bucket queue would.

Symbols must stay below 2**31 so packed pair codes fit int64; terminals
are bytes and rule ordinals are bounded by half the input length, so any
sequence that fits in memory satisfies this.
"""

from __future__ import annotations

import numpy as np

try:
    from numba import njit
except ImportError:  # pragma: no cover - optional accelerator
    njit = None

HAVE_JIT = njit is not None

# slot names for the shared scalar-state array
_PEND = 0  # pending stack size
_NREC = 1  # records allocated so far
_FLT = 2   # free-list top
_STAMP = 3  # last issued bucket-entry stamp
_HSZ = 4   # heap size


if HAVE_JIT:

    @njit(inline="always")
    def _ht_home(code, shift):
        # Fibonacci hashing; high multiplier bits index the table
        h = np.uint64(code) * np.uint64(0x9E3779B97F4A7C15)
        return np.int64(h >> np.uint64(shift))

    @njit(inline="always")
    def _ht_get(ht_key, ht_val, mask, shift, code):
        i = _ht_home(code, shift)
        while True:
            k = ht_key[i]
            if k == code:
                return ht_val[i]
            if k == -1:
                return -1
            i = (i + 1) & mask

    @njit(inline="always")
    def _ht_put(ht_key, ht_val, mask, shift, code, val):
        # caller guarantees the key is absent
        i = _ht_home(code, shift)
        while ht_key[i] != -1:
            i = (i + 1) & mask
        ht_key[i] = code
        ht_val[i] = val

    @njit(inline="always")
    def _ht_del(ht_key, ht_val, mask, shift, code):
        # backward-shift compaction keeps probe chains intact without
        # tombstones, so the table never degrades under heavy churn
        i = _ht_home(code, shift)
        while ht_key[i] != code:
            i = (i + 1) & mask
        j = i
        while True:
            j = (j + 1) & mask
            k = ht_key[j]
            if k == -1:
                break
            home = _ht_home(k, shift)
            if ((j - home) & mask) >= ((j - i) & mask):
                ht_key[i] = k
                ht_val[i] = ht_val[j]
                i = j
        ht_key[i] = -1

    @njit(inline="always")
    def _heap_push(st, h_count, h_code, h_stamp, count, code, stamp):
        # max-heap on (count, -code); caller guarantees capacity
        i = st[_HSZ]
        st[_HSZ] = i + 1
        h_count[i] = count
        h_code[i] = code
        h_stamp[i] = stamp
        while i > 0:
            par = (i - 1) >> 1
            pc = h_count[par]
            pd = h_code[par]
            if count > pc or (count == pc and code < pd):
                h_count[i] = pc
                h_code[i] = pd
                h_stamp[i] = h_stamp[par]
                h_count[par] = count
                h_code[par] = code
                h_stamp[par] = stamp
                i = par
            else:
                break

    @njit(inline="always")
    def _heap_pop(st, h_count, h_code, h_stamp):
        last = st[_HSZ] - 1
        st[_HSZ] = last
        if last <= 0:
            return
        h_count[0] = h_count[last]
        h_code[0] = h_code[last]
        h_stamp[0] = h_stamp[last]
        i = 0
        while True:
            l = 2 * i + 1
            if l >= last:
                break
            best = l
            r = l + 1
            if r < last and (h_count[r] > h_count[l]
                             or (h_count[r] == h_count[l]
                                 and h_code[r] < h_code[l])):
                best = r
            if (h_count[best] > h_count[i]
                    or (h_count[best] == h_count[i]
                        and h_code[best] < h_code[i])):
                tc = h_count[i]
                td = h_code[i]
                ts = h_stamp[i]
                h_count[i] = h_count[best]
                h_code[i] = h_code[best]
                h_stamp[i] = h_stamp[best]
                h_count[best] = tc
                h_code[best] = td
                h_stamp[best] = ts
                i = best
            else:
                break

    @njit
    def _credit(st, ht_key, ht_val, mask, shift, fl,
                rec_count, rec_head, rec_tail, rec_stamp,
                prev_occ, next_occ, threaded, pend,
                left, right, slot, after):
        # register a counted occurrence of (left, right) at slot; after
        # places it in the thread (-2 appends at the tail, -1 prepends,
        # otherwise splice behind that thread slot)
        code = (left << 32) | right
        threaded[slot] = 1
        idx = _ht_get(ht_key, ht_val, mask, shift, code)
        if idx == -1:
            # first occurrence: a count-1 record tracks just its slot
            if st[_FLT] > 0:
                st[_FLT] -= 1
                idx = fl[st[_FLT]]
            else:
                idx = st[_NREC]
                st[_NREC] += 1
            rec_count[idx] = 1
            rec_head[idx] = slot
            rec_tail[idx] = slot
            rec_stamp[idx] = -1
            prev_occ[slot] = -1
            next_occ[slot] = -1
            _ht_put(ht_key, ht_val, mask, shift, code, idx)
            return
        count = rec_count[idx]
        if count == 1:
            first = rec_head[idx]
            if first < slot:
                lo = first
                hi = slot
            else:
                lo = slot
                hi = first
            prev_occ[lo] = -1
            next_occ[lo] = hi
            prev_occ[hi] = lo
            next_occ[hi] = -1
            rec_count[idx] = 2
            rec_head[idx] = lo
            rec_tail[idx] = hi
            pend[st[_PEND]] = code
            st[_PEND] += 1
            return
        rec_count[idx] = count + 1
        a = after
        if a == -2:
            a = rec_tail[idx]
        if a < 0:
            follower = rec_head[idx]
            rec_head[idx] = slot
            prev_occ[slot] = -1
        else:
            follower = next_occ[a]
            next_occ[a] = slot
            prev_occ[slot] = a
        next_occ[slot] = follower
        if follower < 0:
            rec_tail[idx] = slot
        else:
            prev_occ[follower] = slot
        pend[st[_PEND]] = code
        st[_PEND] += 1

    @njit
    def _uncredit(st, ht_key, ht_val, mask, shift, fl,
                  rec_count, rec_head, rec_tail,
                  prev_occ, next_occ, threaded,
                  left, right, slot):
        # drop the counted occurrence of (left, right) at slot; returns
        # the slot's thread predecessor (-1 if it was the head), used as
        # the splice-back anchor by run-head repair
        code = (left << 32) | right
        threaded[slot] = 0
        idx = _ht_get(ht_key, ht_val, mask, shift, code)
        if rec_count[idx] == 1:
            _ht_del(ht_key, ht_val, mask, shift, code)
            fl[st[_FLT]] = idx
            st[_FLT] += 1
            return -1
        p = prev_occ[slot]
        nn = next_occ[slot]
        if p < 0:
            rec_head[idx] = nn
        else:
            next_occ[p] = nn
        if nn < 0:
            rec_tail[idx] = p
        else:
            prev_occ[nn] = p
        prev_occ[slot] = -1
        next_occ[slot] = -1
        rec_count[idx] -= 1
        return p

    @njit
    def _repair_run_head(st, ht_key, ht_val, mask, shift, fl,
                         rec_count, rec_head, rec_tail, rec_stamp,
                         prev_occ, next_occ, threaded, pend,
                         sym, live_next, symbol, start, anchor):
        # erosion at a run's head shifts the greedy parity of every
        # self-pair credit in the remainder: unthread them and re-file
        # from the new head.  The last run slot is skipped; its flag, if
        # set, belongs to the pair formed with the symbol after the run.
        s = start
        while True:
            nxt = live_next[s]
            if nxt < 0 or sym[nxt] != symbol:
                break
            if threaded[s]:
                _uncredit(st, ht_key, ht_val, mask, shift, fl,
                          rec_count, rec_head, rec_tail,
                          prev_occ, next_occ, threaded,
                          symbol, symbol, s)
            s = nxt
        s = start
        while s >= 0 and sym[s] == symbol:
            # advancing by two can step past an even-length run, so the
            # slot itself is re-checked, not just its successor
            nxt = live_next[s]
            if nxt < 0 or sym[nxt] != symbol:
                break
            _credit(st, ht_key, ht_val, mask, shift, fl,
                    rec_count, rec_head, rec_tail, rec_stamp,
                    prev_occ, next_occ, threaded, pend,
                    symbol, symbol, s, anchor)
            anchor = s
            s = live_next[nxt]

    @njit(cache=True)
    def _compress_core(sym, min_frequency, max_rules):
        """Compress sym in place; returns (rule_left, rule_right, final).

        sym must be int64 with values in [0, 256).  max_rules < 0 means
        unbounded.
        """
        n = sym.shape[0]
        rule_cap = n // 2 + 2
        rule_left = np.empty(rule_cap, np.int64)
        rule_right = np.empty(rule_cap, np.int64)
        nrules = 0
        if n < 2:
            return rule_left[:0].copy(), rule_right[:0].copy(), sym.copy()

        prev_occ = np.full(n, -1, np.int64)
        next_occ = np.full(n, -1, np.int64)
        live_prev = np.empty(n, np.int64)
        live_next = np.empty(n, np.int64)
        for i in range(n):
            live_prev[i] = i - 1
            live_next[i] = i + 1
        live_next[n - 1] = -1
        threaded = np.zeros(n, np.uint8)

        # distinct records never exceed the threaded-slot count, so n + 2
        # bounds the record store even mid-step
        rec_cap = n + 2
        rec_count = np.empty(rec_cap, np.int64)
        rec_head = np.empty(rec_cap, np.int64)
        rec_tail = np.empty(rec_cap, np.int64)
        rec_stamp = np.empty(rec_cap, np.int64)
        fl = np.empty(rec_cap, np.int64)

        # power-of-two table kept under 25% load
        p = 4
        while (1 << p) < 4 * rec_cap:
            p += 1
        cap = 1 << p
        mask = cap - 1
        shift = 64 - p
        ht_key = np.full(cap, -1, np.int64)
        ht_val = np.empty(cap, np.int64)

        # one step credits at most ~1.5n pairs even with repair in play
        pend = np.empty(2 * n + 16, np.int64)

        h_cap = n + 1024
        h_count = np.empty(h_cap, np.int64)
        h_code = np.empty(h_cap, np.int64)
        h_stamp = np.empty(h_cap, np.int64)

        st = np.zeros(8, np.int64)

        # initial greedy count: skip slots overlapping the counted
        # self-pair occurrence that starts one position earlier
        run_head = 0
        for i in range(n - 1):
            a = sym[i]
            if i > 0 and a != sym[i - 1]:
                run_head = i
            if a == sym[i + 1] and ((i - run_head) & 1) == 1:
                continue
            _credit(st, ht_key, ht_val, mask, shift, fl,
                    rec_count, rec_head, rec_tail, rec_stamp,
                    prev_occ, next_occ, threaded, pend,
                    a, sym[i + 1], i, -2)

        total_removed = 0
        while True:
            if max_rules >= 0 and nrules >= max_rules:
                break

            # file fresh bucket entries for pairs whose count grew; the
            # floor dedupes codes pushed twice within one flush
            need = st[_HSZ] + st[_PEND]
            if need > h_cap:
                while h_cap < need:
                    h_cap *= 2
                nc = np.empty(h_cap, np.int64)
                nd = np.empty(h_cap, np.int64)
                ns = np.empty(h_cap, np.int64)
                nc[:st[_HSZ]] = h_count[:st[_HSZ]]
                nd[:st[_HSZ]] = h_code[:st[_HSZ]]
                ns[:st[_HSZ]] = h_stamp[:st[_HSZ]]
                h_count = nc
                h_code = nd
                h_stamp = ns
            floor = st[_STAMP]
            for t in range(st[_PEND]):
                code = pend[t]
                idx = _ht_get(ht_key, ht_val, mask, shift, code)
                if idx == -1:
                    continue
                if rec_count[idx] < 2 or rec_stamp[idx] > floor:
                    continue
                st[_STAMP] += 1
                rec_stamp[idx] = st[_STAMP]
                _heap_push(st, h_count, h_code, h_stamp,
                           rec_count[idx], code, st[_STAMP])
            st[_PEND] = 0

            # pop the most frequent pair, discarding stale entries and
            # re-filing entries whose count moved since they were pushed
            chosen_idx = -1
            chosen_code = -1
            while st[_HSZ] > 0:
                count = h_count[0]
                code = h_code[0]
                stamp = h_stamp[0]
                idx = _ht_get(ht_key, ht_val, mask, shift, code)
                if idx == -1 or rec_stamp[idx] != stamp:
                    _heap_pop(st, h_count, h_code, h_stamp)
                    continue
                cur = rec_count[idx]
                if cur != count:
                    _heap_pop(st, h_count, h_code, h_stamp)
                    if cur >= 2:
                        st[_STAMP] += 1
                        rec_stamp[idx] = st[_STAMP]
                        _heap_push(st, h_count, h_code, h_stamp,
                                   cur, code, st[_STAMP])
                    continue
                if count < min_frequency:
                    break
                _heap_pop(st, h_count, h_code, h_stamp)
                chosen_idx = idx
                chosen_code = code
                break
            if chosen_idx == -1:
                break

            left_sym = chosen_code >> 32
            right_sym = chosen_code & 0xFFFFFFFF
            head = rec_head[chosen_idx]
            _ht_del(ht_key, ht_val, mask, shift, chosen_code)
            fl[st[_FLT]] = chosen_idx
            st[_FLT] += 1

            fresh = 256 + nrules
            if fresh >= 4294967296:
                raise OverflowError(
                    "rule ordinals exhausted the 32-bit symbol space")
            rule_left[nrules] = left_sym
            rule_right[nrules] = right_sym
            nrules += 1
            self_pair = left_sym == right_sym

            slot = head
            while slot >= 0:
                i = slot
                upcoming = next_occ[i]
                threaded[i] = 0
                prev_occ[i] = -1
                next_occ[i] = -1

                p = live_prev[i]
                if p >= 0 and threaded[p]:
                    # the (left-context, left_sym) occurrence dies here
                    _uncredit(st, ht_key, ht_val, mask, shift, fl,
                              rec_count, rec_head, rec_tail,
                              prev_occ, next_occ, threaded,
                              sym[p], left_sym, p)

                link = 0
                while True:
                    j = live_next[i]
                    q = live_next[j]
                    anchor = -1
                    if threaded[j]:
                        # the (right_sym, right-context) occurrence dies
                        anchor = _uncredit(st, ht_key, ht_val, mask, shift,
                                           fl, rec_count, rec_head, rec_tail,
                                           prev_occ, next_occ, threaded,
                                           right_sym, sym[q], j)
                    sym[i] = fresh
                    sym[j] = -1
                    live_next[i] = q
                    if q >= 0:
                        live_prev[q] = i
                    total_removed += 1

                    if q >= 0 and q == upcoming:
                        # adjacent occurrence: extend the chain
                        upcoming = next_occ[q]
                        threaded[q] = 0
                        prev_occ[q] = -1
                        next_occ[q] = -1
                        link += 1
                        if link & 1:
                            # self-pair credit for the fresh-symbol run
                            _credit(st, ht_key, ht_val, mask, shift, fl,
                                    rec_count, rec_head, rec_tail, rec_stamp,
                                    prev_occ, next_occ, threaded, pend,
                                    fresh, fresh, i, -2)
                        i = q
                        continue

                    if q >= 0:
                        y = sym[q]
                        if y == right_sym and not self_pair:
                            # the removal eroded the head of a right_sym
                            # run; its parity credits need re-filing
                            _repair_run_head(st, ht_key, ht_val, mask, shift,
                                             fl, rec_count, rec_head,
                                             rec_tail, rec_stamp,
                                             prev_occ, next_occ, threaded,
                                             pend, sym, live_next,
                                             right_sym, q, anchor)
                        _credit(st, ht_key, ht_val, mask, shift, fl,
                                rec_count, rec_head, rec_tail, rec_stamp,
                                prev_occ, next_occ, threaded, pend,
                                fresh, y, i, -2)
                    if p >= 0:
                        _credit(st, ht_key, ht_val, mask, shift, fl,
                                rec_count, rec_head, rec_tail, rec_stamp,
                                prev_occ, next_occ, threaded, pend,
                                sym[p], fresh, p, -2)
                    break

                slot = upcoming

        out = np.empty(n - total_removed, np.int64)
        w = 0
        for i in range(n):
            s = sym[i]
            if s != -1:
                out[w] = s
                w += 1
        return rule_left[:nrules].copy(), rule_right[:nrules].copy(), out


def compress_array(symbols: np.ndarray, min_frequency: int,
                   max_rules: int | None):
    """Run the kernel over an int64 terminal array (mutated in place)."""
    limit = -1 if max_rules is None else max_rules
    return _compress_core(symbols, min_frequency, limit)
