#!/usr/bin/env python3
"""Build the pinned Hamlet fixture corpus from the Moby/Globe HTML edition.

The Moby Shakespeare (the public-domain Globe text, as published for years
at shakespeare.mit.edu and mirrored on GitHub as TheMITTech/shakespeare)
ships one HTML file per scene, named ``hamlet.<act>.<scene>.html``.  This
script flattens those files into one UTF-8 plain-text file per act
(``act1.txt`` .. ``act5.txt``), keeping speech headers, dialogue lines and
stage directions in document order and dropping all navigation chrome.

Usage:
    python scripts/build_hamlet_fixture.py /path/to/shakespeare/Tragedy/hamlet -o data/hamlet
"""

import argparse
import re
import sys
from html.parser import HTMLParser
from pathlib import Path

ROMAN = {1: "I", 2: "II", 3: "III", 4: "IV", 5: "V"}


class SceneExtractor(HTMLParser):
    """Collect visible play text from one scene page, skipping nav tables."""

    LINE_BREAKERS = {"br", "blockquote", "h3", "p", "i", "b"}

    def __init__(self):
        super().__init__(convert_charrefs=True)
        self.lines = []
        self._buf = []
        self._table_depth = 0
        self._in_body = False

    def handle_starttag(self, tag, attrs):
        if tag == "table":
            self._table_depth += 1
        elif tag == "body":
            self._in_body = True
        elif tag in self.LINE_BREAKERS:
            self._flush()

    def handle_endtag(self, tag):
        if tag == "table":
            self._table_depth = max(0, self._table_depth - 1)
        elif tag in self.LINE_BREAKERS:
            self._flush()

    def handle_data(self, data):
        if self._in_body and self._table_depth == 0:
            self._buf.append(data)

    def _flush(self):
        text = re.sub(r"\s+", " ", "".join(self._buf)).strip()
        self._buf = []
        if text:
            self.lines.append(text)

    def close(self):
        super().close()
        self._flush()


def extract_scene(path: Path) -> str:
    parser = SceneExtractor()
    parser.feed(path.read_text(encoding="latin-1"))
    parser.close()
    return "\n".join(parser.lines) + "\n"


def build_acts(src: Path, out: Path) -> None:
    scene_files = {}
    for f in src.glob("hamlet.*.html"):
        m = re.fullmatch(r"hamlet\.(\d+)\.(\d+)\.html", f.name)
        if m:
            scene_files[(int(m.group(1)), int(m.group(2)))] = f
    if not scene_files:
        sys.exit(f"no hamlet.<act>.<scene>.html files under {src}")

    out.mkdir(parents=True, exist_ok=True)
    acts = sorted({act for act, _ in scene_files})
    for act in acts:
        chunks = [f"ACT {ROMAN.get(act, act)}\n"]
        for key in sorted(k for k in scene_files if k[0] == act):
            chunks.append(extract_scene(scene_files[key]))
        target = out / f"act{act}.txt"
        target.write_text("\n".join(chunks), encoding="utf-8")
        print(f"wrote {target}")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("source", type=Path, help="directory holding hamlet.<act>.<scene>.html files")
    ap.add_argument("-o", "--out", type=Path, default=Path("data/hamlet"))
    args = ap.parse_args()
    build_acts(args.source, args.out)


if __name__ == "__main__":
    main()
