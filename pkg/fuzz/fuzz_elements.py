import json
import sys

import atheris
from helpers import EnhancedDataProvider

with atheris.instrument_imports():
    from python_renner.exceptions import ElementParseError
    from python_renner.export import element_to_json, parse_elements
    from python_renner.problem import create_problem

monoid = create_problem({"cartan": [[2, -1], [-2, 2]], "mu": [1, 0]}).monoid


def TestOneInput(data: bytes) -> None:
    fdp = EnhancedDataProvider(data)
    try:
        elements = parse_elements(fdp.ConsumeRandomString(), monoid)
    except ElementParseError:
        return

    product = monoid.multiply(*elements)
    (again,) = parse_elements(json.dumps(element_to_json(product)), monoid)
    assert again == product
    if len(elements) >= 3:
        x, y, z = elements[:3]
        assert monoid.multiply(monoid.multiply(x, y), z) == monoid.multiply(x, monoid.multiply(y, z))


def main():
    atheris.Setup(sys.argv, TestOneInput)
    atheris.Fuzz()


if __name__ == "__main__":
    main()
