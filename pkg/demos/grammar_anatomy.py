"""
Anatomy of a pair-replacement grammar
=====================================

Compresses a short text and walks the resulting grammar rule by rule,
showing how nested pairs spell out ever longer substrings.
"""

from rpim import NONTERMINAL_BASE, Grammar, Rule, compress, expand

text = b"sing a song of sixpence, a pocket full of song, sing a song"
grammar, final = compress(text)

print(f"input: {len(text)} bytes -> {len(grammar.rules)} rules "
      f"+ {len(final)} residual symbols\n")


def spell(symbol):
    # expand one symbol back to the bytes it stands for
    return bytes(expand(grammar, [symbol])).decode("latin-1")


def show(symbol):
    if symbol < NONTERMINAL_BASE:
        return repr(chr(symbol))
    return f"R{symbol}"


# each rule pairs two earlier symbols, so later rules cover longer runs
for ordinal, rule in enumerate(grammar.rules):
    symbol = NONTERMINAL_BASE + ordinal
    print(f"R{symbol} = {show(rule.left)} + {show(rule.right)}"
          f"   spells {spell(symbol)!r}")

print("\nfinal sequence:", " ".join(show(s) for s in final))

# Every rule references only symbols defined before it, which is what
# makes single-pass expansion possible.
for ordinal, rule in enumerate(grammar.rules):
    assert rule.left < NONTERMINAL_BASE + ordinal
    assert rule.right < NONTERMINAL_BASE + ordinal

assert bytes(expand(grammar, final)) == text
print("expansion reproduces the input exactly")

# grammars are plain data; hand-building one works just as well
toy = Grammar([Rule(ord("a"), ord("b")), Rule(256, 256)])
print("\nhand-built toy grammar:", bytes(expand(toy, [257, 257])))
