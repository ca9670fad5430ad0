"""
Arrangement files - line-oriented text format for (multi)arrangements

    arrangement 1
    dim 2
    vars x y
    hyp 1 0 = 0 mult 3
    hyp 1 -1 = 0

Rationals are `p/q` or integer literals, `#` starts a comment.
"""

from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple, Union

from loguru import logger

from hyperfree.algebra.scalars import parse_scalar
from hyperfree.arrangements.models import Arrangement, Hyperplane, Multiplicity
from hyperfree.errors import ArrangementParseError, DomainError

FORMAT_VERSION = 1


@dataclass(frozen=True)
class ArrangementFile:
    """Parsed contents of an arrangement file"""

    arrangement: Arrangement
    multiplicity: Multiplicity
    version: int = FORMAT_VERSION

    @property
    def is_simple(self) -> bool:
        return all(v == 1 for v in self.multiplicity.values)


def _strip(line: str) -> str:
    return line.split("#", 1)[0].strip()


def _int_field(tokens: List[str], keyword: str, number: int) -> int:
    if len(tokens) != 2:
        raise ArrangementParseError(f"expected '{keyword} INT'", number)
    try:
        return int(tokens[1])
    except ValueError as e:
        raise ArrangementParseError(f"'{keyword}' needs an integer, got '{tokens[1]}'", number) from e


def _parse_hyp(tokens: List[str], dimension: int, number: int) -> Tuple[Hyperplane, int]:
    body = tokens[1:]
    multiplicity = 1
    if len(body) >= 2 and body[-2] == "mult":
        try:
            multiplicity = int(body[-1])
        except ValueError as e:
            raise ArrangementParseError(f"'mult' needs an integer, got '{body[-1]}'", number) from e
        if multiplicity < 0:
            raise ArrangementParseError(f"multiplicity must be >= 0, got {multiplicity}", number)
        body = body[:-2]

    if len(body) != dimension + 2 or body[dimension] != "=":
        raise ArrangementParseError(
            f"expected 'hyp' followed by {dimension} coefficients, '=' and a constant", number
        )
    try:
        normal = [parse_scalar(t) for t in body[:dimension]]
        constant = parse_scalar(body[dimension + 1])
        hyperplane = Hyperplane.from_coefficients(normal, constant)
    except DomainError as e:
        raise ArrangementParseError(str(e), number) from e
    return hyperplane, multiplicity


def parse_arrangement(text: str) -> ArrangementFile:
    """
    Parse arrangement file text

    Args:
        text: File contents

    Returns:
        ArrangementFile with canonicalized hyperplanes in file order and
        multiplicities defaulting to 1

    Raises:
        ArrangementParseError: On syntax errors, zero normals or duplicate
            hyperplanes, with the offending line number
    """
    version: Optional[int] = None
    dimension: Optional[int] = None
    names: Optional[Tuple[str, ...]] = None
    hyperplanes: List[Hyperplane] = []
    multiplicities: List[int] = []
    seen: Dict[Hyperplane, int] = {}

    for number, raw in enumerate(text.splitlines(), start=1):
        line = _strip(raw)
        if not line:
            continue
        tokens = line.split()
        keyword = tokens[0]

        if version is None:
            if keyword != "arrangement":
                raise ArrangementParseError("file must start with 'arrangement INT'", number)
            version = _int_field(tokens, keyword, number)
            if version != FORMAT_VERSION:
                raise ArrangementParseError(f"unsupported format version {version}", number)
        elif dimension is None:
            if keyword != "dim":
                raise ArrangementParseError("expected 'dim INT' after the header", number)
            dimension = _int_field(tokens, keyword, number)
            if dimension < 1:
                raise ArrangementParseError(f"dimension must be positive, got {dimension}", number)
        elif keyword == "vars":
            if names is not None or hyperplanes:
                raise ArrangementParseError("'vars' must come once, before any 'hyp'", number)
            if len(tokens) != dimension + 1:
                raise ArrangementParseError(f"'vars' needs exactly {dimension} names", number)
            if len(set(tokens[1:])) != dimension:
                raise ArrangementParseError("variable names must be distinct", number)
            names = tuple(tokens[1:])
        elif keyword == "hyp":
            hyperplane, multiplicity = _parse_hyp(tokens, dimension, number)
            if hyperplane in seen:
                raise ArrangementParseError(
                    f"duplicate hyperplane {hyperplane.format(names)} (first on line {seen[hyperplane]})",
                    number,
                )
            seen[hyperplane] = number
            hyperplanes.append(hyperplane)
            multiplicities.append(multiplicity)
        else:
            raise ArrangementParseError(f"unknown keyword '{keyword}'", number)

    if version is None or dimension is None:
        raise ArrangementParseError("missing 'arrangement' header or 'dim' line")

    arrangement = Arrangement(dimension, tuple(hyperplanes), names)
    logger.debug(
        f"Parsed {len(hyperplanes)} hyperplanes in dimension {dimension} "
        f"({'central' if arrangement.is_central else 'affine'})"
    )
    return ArrangementFile(arrangement, Multiplicity(tuple(multiplicities)), version)


def serialize_arrangement(
    arrangement: Arrangement, multiplicity: Optional[Multiplicity] = None
) -> str:
    """
    Canonical text of an arrangement; parse_arrangement inverts it

    Integer coefficients of the canonical row are written out and `mult`
    appears only when it differs from 1.
    """
    m = multiplicity or Multiplicity.simple(arrangement)
    m.validate_for(arrangement)
    lines = [f"arrangement {FORMAT_VERSION}", f"dim {arrangement.dimension}"]
    if arrangement.names:
        lines.append("vars " + " ".join(arrangement.names))
    for h, k in zip(arrangement.hyperplanes, m.values):
        entry = "hyp " + " ".join(str(a) for a in h.normal) + f" = {h.constant}"
        if k != 1:
            entry += f" mult {k}"
        lines.append(entry)
    return "\n".join(lines) + "\n"


def load_arrangement(path: Union[str, Path]) -> ArrangementFile:
    """
    Read and parse an arrangement file

    Raises:
        FileNotFoundError: If the file does not exist
        ArrangementParseError: On malformed contents
    """
    file_path = Path(path)
    if not file_path.exists():
        raise FileNotFoundError(f"Arrangement file not found: {path}")
    logger.debug(f"Loading arrangement file: {file_path}")
    return parse_arrangement(file_path.read_text())


def save_arrangement(
    path: Union[str, Path],
    arrangement: Arrangement,
    multiplicity: Optional[Multiplicity] = None,
) -> Path:
    file_path = Path(path)
    file_path.parent.mkdir(parents=True, exist_ok=True)
    file_path.write_text(serialize_arrangement(arrangement, multiplicity))
    logger.info(f"Arrangement written to {file_path}")
    return file_path


def parse_multiplicity(text: str, count: int) -> Multiplicity:
    """Comma- or space-separated nonnegative integers, one per hyperplane"""
    tokens: Sequence[str] = text.replace(",", " ").split()
    try:
        values = tuple(int(t) for t in tokens)
    except ValueError as e:
        raise DomainError(f"Multiplicity must be integers, got '{text}'") from e
    if len(values) != count:
        raise DomainError(f"Multiplicity has {len(values)} entries for {count} hyperplanes")
    return Multiplicity(values)
