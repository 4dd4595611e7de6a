import json
import os
import sys

# Add the project root to sys.path to allow importing the local package
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from alpert_bases.tools.schema import report_schemas


def main():
    output = sys.argv[1] if len(sys.argv) > 1 else 'report_schema.json'
    with open(output, 'w', encoding='utf-8') as handle:
        json.dump(report_schemas(), handle, indent=2)
        handle.write('\n')
    print(f"Wrote {len(report_schemas()['definitions'])} schemas to {output}")


if __name__ == "__main__":
    main()
