# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled assignment scanner; same interface as ``_scan_py.Scanner``."""
from libc.stdint cimport int32_t, int64_t, uint64_t
from libc.stdlib cimport free, malloc

from .program import lowest_bits

# must match program.py
cdef enum:
    ATOM = 0
    NOT = 1
    AND = 2
    OR = 3
    IMPLIES = 4
    IFF = 5


cdef int32_t* _copy(list xs) except NULL:
    cdef Py_ssize_t n = len(xs), i
    cdef int32_t* out = <int32_t*> malloc((n + 1) * sizeof(int32_t))
    if out == NULL:
        raise MemoryError()
    for i in range(n):
        out[i] = xs[i]
    return out


cdef inline bint _holds(uint64_t m, const int32_t* ops, const int32_t* args,
                        int lo, int hi, unsigned char* stack) noexcept nogil:
    cdef int pc, sp = 0, k, op, arg
    cdef unsigned char acc, a, b
    for pc in range(lo, hi):
        op = ops[pc]
        arg = args[pc]
        if op == ATOM:
            stack[sp] = (m >> arg) & 1
            sp += 1
        elif op == NOT:
            stack[sp - 1] ^= 1
        elif op == AND:
            acc = 1
            for k in range(sp - arg, sp):
                acc &= stack[k]
            sp -= arg
            stack[sp] = acc
            sp += 1
        elif op == OR:
            acc = 0
            for k in range(sp - arg, sp):
                acc |= stack[k]
            sp -= arg
            stack[sp] = acc
            sp += 1
        elif op == IMPLIES:
            b = stack[sp - 1]
            a = stack[sp - 2]
            sp -= 1
            stack[sp - 1] = (a ^ 1) | b
        else:
            b = stack[sp - 1]
            a = stack[sp - 2]
            sp -= 1
            stack[sp - 1] = (a == b)
    return stack[0]


cdef class Scanner:
    cdef int32_t* ops
    cdef int32_t* args
    cdef int32_t* starts
    cdef int32_t* lowbit
    cdef unsigned char* stack
    cdef int n_programs
    cdef readonly int n_atoms

    def __cinit__(self, ops, args, starts, int n_atoms):
        if n_atoms > 62:
            raise ValueError("at most 62 atoms")
        self.n_atoms = n_atoms
        self.n_programs = len(starts) - 1
        self.ops = _copy(list(ops))
        self.args = _copy(list(args))
        self.starts = _copy(list(starts))
        self.lowbit = _copy(lowest_bits(ops, args, starts))
        self.stack = <unsigned char*> malloc(len(ops) + 1)
        if self.stack == NULL:
            raise MemoryError()

    def __dealloc__(self):
        free(self.ops)
        free(self.args)
        free(self.starts)
        free(self.lowbit)
        free(self.stack)

    def next(self, int64_t start, int64_t stop, ties=()):
        cdef Py_ssize_t n_ties = len(ties), t
        cdef int32_t* ta = <int32_t*> malloc((n_ties + 1) * sizeof(int32_t))
        cdef int32_t* tb = <int32_t*> malloc((n_ties + 1) * sizeof(int32_t))
        cdef uint64_t m
        cdef int p, low
        cdef int n_programs = self.n_programs
        cdef const int32_t* ops = self.ops
        cdef const int32_t* args = self.args
        cdef const int32_t* starts = self.starts
        cdef const int32_t* lowbit = self.lowbit
        cdef unsigned char* stack = self.stack
        cdef int64_t found = -1
        if ta == NULL or tb == NULL:
            free(ta)
            free(tb)
            raise MemoryError()
        for t, (i, j) in enumerate(ties):
            ta[t] = i
            tb[t] = j
        with nogil:
            m = <uint64_t> start
            while m < <uint64_t> stop:
                # on failure, every mask up to the next multiple of 2**low
                # agrees on the offending bits and fails the same way
                low = -1
                for t in range(n_ties):
                    if ((m >> ta[t]) ^ (m >> tb[t])) & 1:
                        low = ta[t] if ta[t] < tb[t] else tb[t]
                        break
                if low < 0:
                    for p in range(n_programs):
                        if not _holds(m, ops, args, starts[p], starts[p + 1], stack):
                            low = lowbit[p]
                            break
                if low < 0:
                    found = <int64_t> m
                    break
                m = ((m >> low) + 1) << low
        free(ta)
        free(tb)
        return found
