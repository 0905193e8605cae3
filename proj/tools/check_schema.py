"""Validates certificates against the schema embedded in docs/certificates.md."""
import json
import re
import sys
from pathlib import Path

import jsonschema


def main(doc, files):
    text = Path(doc).read_text()
    blocks = [b for b in re.findall(r"```json\n(.*?)```", text, re.S) if "$schema" in b]
    validator = jsonschema.Draft202012Validator(json.loads(blocks[0]))
    bad = 0
    for f in files:
        errors = list(validator.iter_errors(json.loads(Path(f).read_text())))
        for e in errors[:3]:
            print(f"{f}: {e.message[:200]}")
        bad += bool(errors)
    print(f"{len(files) - bad}/{len(files)} certificates match the schema")
    return 1 if bad or not files else 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1], sorted(str(p) for p in Path(sys.argv[2]).glob("*.json"))))
