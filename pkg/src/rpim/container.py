"""Binary container for compressed payloads (.rpim files).

Layout, all integers little-endian:

    "RPIM"  magic
    0x01    version
    kind    0x00 raw byte stream / 0x01 image
    kind == image: width u32, height u32, channels u8, mode u8
    kind == raw:   original_length varint
    rule count varint, then per rule: left varint, right varint
    sequence length varint, then one varint per symbol

Varints are unsigned LEB128 and must be minimally encoded; the
deserializer rejects anything else so that serialize and deserialize are
exact inverses on the accepted domain.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass

from .errors import CorruptContainerError, MalformedGrammarError, UnrecognizedContainerError
from .image import LinearizationMode
from .repair import NONTERMINAL_BASE, Grammar, Rule

MAGIC = b"RPIM"
VERSION = 1

_KIND_RAW = 0
_KIND_IMAGE = 1

# Symbols live in a 32-bit value space; length fields get the full 64 bits.
_SYMBOL_LIMIT = 1 << 32
_LENGTH_LIMIT = 1 << 64


@dataclass(frozen=True)
class RawPayload:
    """Opaque byte-stream payload: only the expanded length is recorded."""

    original_length: int


@dataclass(frozen=True)
class ImagePayload:
    """Image payload: geometry plus the linearization used on the samples."""

    width: int
    height: int
    channels: int
    mode: LinearizationMode

    @property
    def sample_count(self) -> int:
        return self.width * self.height * self.channels


@dataclass
class CompressedArtifact:
    payload: RawPayload | ImagePayload
    grammar: Grammar
    sequence: list[int]

    @property
    def expanded_length(self) -> int:
        if isinstance(self.payload, RawPayload):
            return self.payload.original_length
        return self.payload.sample_count


def write_varint(out: bytearray, value: int) -> None:
    if value < 0:
        raise ValueError("varints are unsigned")
    while value >= 0x80:
        out.append((value & 0x7F) | 0x80)
        value >>= 7
    out.append(value)


def read_varint(data: bytes, pos: int, limit: int = _LENGTH_LIMIT) -> tuple[int, int]:
    """Decode one varint at pos, returning (value, next position)."""
    value = 0
    shift = 0
    start = pos
    while True:
        if pos >= len(data):
            raise CorruptContainerError(f"truncated varint at offset {start}")
        byte = data[pos]
        pos += 1
        value |= (byte & 0x7F) << shift
        if not byte & 0x80:
            # forbid non-minimal encodings such as 0x80 0x00
            if byte == 0 and pos - start > 1:
                raise CorruptContainerError(f"non-minimal varint at offset {start}")
            break
        shift += 7
        if shift >= 64:
            raise CorruptContainerError(f"varint overflow at offset {start}")
    if value >= limit:
        raise CorruptContainerError(f"varint out of range at offset {start}")
    return value, pos


def serialize(artifact: CompressedArtifact) -> bytes:
    out = bytearray(MAGIC)
    out.append(VERSION)
    payload = artifact.payload
    if isinstance(payload, ImagePayload):
        out.append(_KIND_IMAGE)
        out += struct.pack(
            "<IIBB", payload.width, payload.height, payload.channels, int(payload.mode)
        )
    else:
        out.append(_KIND_RAW)
        write_varint(out, payload.original_length)
    rules = artifact.grammar.rules
    write_varint(out, len(rules))
    for rule in rules:
        write_varint(out, rule.left)
        write_varint(out, rule.right)
    write_varint(out, len(artifact.sequence))
    for sym in artifact.sequence:
        write_varint(out, sym)
    return bytes(out)


def deserialize(data: bytes) -> CompressedArtifact:
    """Parse and fully validate a container.

    Raises UnrecognizedContainerError for foreign data, CorruptContainerError
    for structural damage, MalformedGrammarError for bad rule topology.
    """
    if len(data) < 5 or data[:4] != MAGIC:
        raise UnrecognizedContainerError("bad magic: not an RPIM container")
    if data[4] != VERSION:
        raise UnrecognizedContainerError(f"unsupported version {data[4]}")
    if len(data) < 6:
        raise CorruptContainerError("container ends before kind byte")
    kind = data[5]
    pos = 6

    payload: RawPayload | ImagePayload
    if kind == _KIND_IMAGE:
        if len(data) < pos + 10:
            raise CorruptContainerError("truncated image header")
        width, height, channels, mode_byte = struct.unpack_from("<IIBB", data, pos)
        pos += 10
        if width == 0 or height == 0:
            raise CorruptContainerError("image dimensions must be positive")
        if channels not in (1, 3):
            raise CorruptContainerError(f"unsupported channel count {channels}")
        try:
            mode = LinearizationMode(mode_byte)
        except ValueError:
            raise CorruptContainerError(f"unknown linearization mode {mode_byte}") from None
        payload = ImagePayload(width, height, channels, mode)
    elif kind == _KIND_RAW:
        original_length, pos = read_varint(data, pos)
        payload = RawPayload(original_length)
    else:
        raise CorruptContainerError(f"unknown payload kind {kind}")

    rule_count, pos = read_varint(data, pos, limit=_SYMBOL_LIMIT - NONTERMINAL_BASE)
    rules = []
    for ordinal in range(rule_count):
        left, pos = read_varint(data, pos, limit=_SYMBOL_LIMIT)
        right, pos = read_varint(data, pos, limit=_SYMBOL_LIMIT)
        bound = NONTERMINAL_BASE + ordinal
        if left >= bound or right >= bound:
            raise MalformedGrammarError(
                f"rule {ordinal} references symbol outside its prefix"
            )
        rules.append(Rule(left, right))
    grammar = Grammar(rules)

    seq_len, pos = read_varint(data, pos)
    symbol_bound = NONTERMINAL_BASE + rule_count
    sequence = []
    for _ in range(seq_len):
        sym, pos = read_varint(data, pos, limit=_SYMBOL_LIMIT)
        if sym >= symbol_bound:
            raise MalformedGrammarError(f"sequence symbol {sym} is undefined")
        sequence.append(sym)
    if pos != len(data):
        raise CorruptContainerError(f"{len(data) - pos} trailing bytes after sequence")

    artifact = CompressedArtifact(payload, grammar, sequence)
    declared = artifact.expanded_length
    if _expanded_length(grammar, sequence, declared) != declared:
        raise CorruptContainerError("expanded length does not match payload header")
    return artifact


def _expanded_length(grammar: Grammar, sequence: list[int], cap: int) -> int:
    """Expansion length of sequence, saturating just past cap.

    Saturation keeps adversarial doubling chains from producing astronomically
    wide integers; anything above cap compares unequal and that is all the
    caller needs.
    """
    ceiling = cap + 1
    lengths = []
    for rule in grammar.rules:
        left = lengths[rule.left - NONTERMINAL_BASE] if rule.left >= NONTERMINAL_BASE else 1
        right = lengths[rule.right - NONTERMINAL_BASE] if rule.right >= NONTERMINAL_BASE else 1
        lengths.append(min(left + right, ceiling))
    total = 0
    for sym in sequence:
        total += lengths[sym - NONTERMINAL_BASE] if sym >= NONTERMINAL_BASE else 1
        if total >= ceiling:
            return ceiling
    return total
