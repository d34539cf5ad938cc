"""From raw text to a directed weighted co-occurrence network.

Walks the whole construction path on a tiny two-sentence text so every
intermediate value fits on screen: cleaning, sentence segmentation,
tokenization, and the adjacency counting that defines the edges.

Run from the repository root:  python3 demos/01_build_network.py
"""

from pathlib import Path

from coocnet import (
    build_network,
    extract_sentences,
    normalize,
    segment_sentences,
    to_edge_list,
    tokenize,
    write_edge_list,
)

OUT_DIR = Path(__file__).resolve().parent / "output"

text = "Došao je u grad. U grad je došao, kažu, prekasno!"

print("raw text:")
print(f"  {text!r}\n")

cleaned = normalize(text)
print("after cleaning (lowercase, composed, punctuation to spaces):")
print(f"  {cleaned!r}\n")

print("sentences and their tokens:")
for part in segment_sentences(cleaned):
    print(f"  {part!r:34} -> {tokenize(part)}")
print()

net = build_network(extract_sentences(text))
print(f"network: {net.n_nodes} nodes, {net.n_edges} directed edges")
print("each edge counts how often one word directly preceded another")
print("inside a sentence; note there is no edge across the full stop:\n")
for record in to_edge_list(net):
    print(f"  {record.src:>9} -> {record.dst:<9} weight {record.weight}")

OUT_DIR.mkdir(exist_ok=True)
path = OUT_DIR / "mini.edges.tsv"
write_edge_list(net, path)
print(f"\nedge list written to {path}")
print("the file is sorted and byte-stable, so repeated runs hash the same")
