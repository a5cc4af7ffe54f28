"""
Reading and writing documents
=============================

Objects, maps, categories, functors and certificates share one text
format.
"""

from ssetlab.certificates import check_certificate
from ssetlab.textformat import FIXTURE, ParseError, parse, serialize

text = """
# a loop and a map onto it
sset C {
  dim 0: v;
  dim 1: e [d0=v, d1=v];
}
map wrap : Delta1 -> C { 0 -> v; 1 -> v; 01 -> e; }
cert loop_id {
  a = R9 weak-categorical-equivalence id_C;
  conclude a;
}
"""
doc = parse(text)
print(serialize(doc))
print("certificate:", check_certificate(doc.certificates["loop_id"], doc.env()).status)

# Errors carry a line and a column.
try:
    parse("sset T {\n  dim 0: a;\n  dim 1: e [d0=a, d1=b];\n}")
except ParseError as exc:
    print(exc)

# The shipped fixture holds the whole counterexample.
print(FIXTURE.read_text().splitlines()[:5])
