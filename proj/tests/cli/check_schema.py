"""Run a holodiff command and validate its JSON output against a schema file.

usage: check_schema.py SCHEMA_DIR SCHEMA_NAME -- COMMAND...
"""
import json
import pathlib
import subprocess
import sys

from jsonschema import Draft202012Validator
from referencing import Registry, Resource


def registry_for(schema_dir: pathlib.Path) -> Registry:
    resources = []
    for path in sorted(schema_dir.glob("*.schema.json")):
        contents = json.loads(path.read_text())
        resources.append((contents["$id"], Resource.from_contents(contents)))
    return Registry().with_resources(resources)


def main() -> int:
    split = sys.argv.index("--")
    schema_dir = pathlib.Path(sys.argv[1])
    schema_name = sys.argv[2]
    command = sys.argv[split + 1:]

    proc = subprocess.run(command, capture_output=True, text=True, check=False)
    if proc.returncode != 0:
        print(f"command exited {proc.returncode}: {proc.stderr}", file=sys.stderr)
        return 1

    schema = json.loads((schema_dir / schema_name).read_text())
    Draft202012Validator.check_schema(schema)
    validator = Draft202012Validator(schema, registry=registry_for(schema_dir))
    errors = sorted(validator.iter_errors(json.loads(proc.stdout)), key=lambda e: list(e.path))
    for err in errors[:10]:
        print(f"{'/'.join(map(str, err.path))}: {err.message}", file=sys.stderr)
    return 1 if errors else 0


if __name__ == "__main__":
    sys.exit(main())
