#!/usr/bin/env python3
# -*- coding: utf-8 -*-
from typing import Any

from markovkit.common.enums import ExitCode


class BaseExceptionMixin(Exception):
    """Basic exceptions mixed into the class"""

    code: int

    def __init__(self, *, msg: str = None, data: Any = None, index: tuple[int, ...] = ()):
        self.msg = msg
        self.data = data
        # 0-based position of the offending element inside the validated value
        self.index = index
        self.path: str | None = None
        super().__init__(msg)

    def locate(self, path: str) -> 'BaseExceptionMixin':
        """
        Attach the document path of the offending value

        :param path: JSON path of the validated value, e.g. ``$.transition``
        :return:
        """
        self.path = path + ''.join(f'[{i}]' for i in self.index)
        self.msg = f'{self.path}: {self.msg}'
        return self


class UsageError(BaseExceptionMixin):
    """Invalid input: flags, documents, vectors, sequences"""

    code = ExitCode.usage


class DomainError(BaseExceptionMixin):
    """Inference failure on valid input"""

    code = ExitCode.domain


class LabelSpaceError(UsageError):
    """Label space exception"""

    def __init__(self, *, msg: str = 'Invalid label space', data: Any = None):
        super().__init__(msg=msg, data=data)


class UnknownLabelError(UsageError):
    """Label not present in the label space"""

    def __init__(self, *, label: str, labels: tuple[str, ...]):
        self.label = label
        super().__init__(msg=f'Unknown label {label!r}, expected one of: {", ".join(labels)}')


class NegativeEntryError(UsageError):
    """Negative probability entry"""

    def __init__(self, *, index: tuple[int, ...], value: float):
        self.value = value
        position = ', '.join(str(i + 1) for i in index)
        super().__init__(msg=f'Negative entry {value!r} at ({position})', index=index)


class EntryOutOfRangeError(UsageError):
    """Probability entry greater than one or not finite"""

    def __init__(self, *, index: tuple[int, ...], value: float):
        self.value = value
        position = ', '.join(str(i + 1) for i in index)
        super().__init__(msg=f'Entry {value!r} at ({position}) is not a probability', index=index)


class SumNotOneError(UsageError):
    """Probability vector does not sum to one"""

    def __init__(self, *, actual_sum: float):
        self.actual_sum = actual_sum
        super().__init__(msg=f'Entries sum to {actual_sum!r}, expected 1')


class RowSumNotOneError(UsageError):
    """Stochastic matrix row does not sum to one"""

    def __init__(self, *, row: int, actual_sum: float):
        self.row = row
        self.actual_sum = actual_sum
        super().__init__(msg=f'Row {row + 1} sums to {actual_sum!r}, expected 1', index=(row,))


class LengthMismatchError(UsageError):
    """Length mismatch"""

    def __init__(self, *, expected: int, actual: int, what: str = 'entries'):
        self.expected = expected
        self.actual = actual
        super().__init__(msg=f'Expected {expected} {what}, got {actual}')


class ShapeMismatchError(UsageError):
    """Shape mismatch"""

    def __init__(self, *, expected: tuple[int, ...], actual: tuple[int, ...], index: tuple[int, ...] = ()):
        self.expected = expected
        self.actual = actual
        super().__init__(msg=f'Expected shape {expected}, got {actual}', index=index)


class SpaceMismatchError(UsageError):
    """Label spaces of combined values differ"""

    def __init__(self, *, msg: str = 'Label spaces do not match'):
        super().__init__(msg=msg)


class EmptySequenceError(UsageError):
    """Empty state or observation sequence"""

    def __init__(self, *, msg: str = 'Sequence must contain at least one element'):
        super().__init__(msg=msg)


class EmptyObservationSequenceError(EmptySequenceError):
    """Empty observation sequence"""

    def __init__(self):
        super().__init__(msg='Observation sequence must contain at least one element')


class ParseError(UsageError):
    """Document is not well-formed JSON"""

    def __init__(self, *, line: int, column: int, reason: str):
        self.line = line
        self.column = column
        super().__init__(msg=f'JSON parse error at line {line}, column {column}: {reason}')


class SchemaError(UsageError):
    """Document does not follow the model schema"""

    def __init__(self, *, path: str, reason: str):
        super().__init__(msg=reason)
        self.locate(path)


class ModelKindError(UsageError):
    """Operation does not support the model kind"""

    def __init__(self, *, kind: str, expected: str):
        super().__init__(msg=f'This command needs a {expected} model, got {kind}')


class EnumerationTooLargeError(DomainError):
    """Enumeration exceeds the configured cap"""

    def __init__(self, *, required: int, cap: int):
        self.required = required
        self.cap = cap
        super().__init__(msg=f'Enumeration of {required} sequences exceeds the cap of {cap}')


class ZeroEvidenceError(DomainError):
    """Evidence has zero probability"""

    def __init__(self, *, msg: str = 'Evidence has zero probability under the model'):
        super().__init__(msg=msg)


class SplitOutOfRangeError(DomainError):
    """Chain split point outside (1, T)"""

    def __init__(self, *, split: int, length: int):
        self.split = split
        self.length = length
        super().__init__(msg=f'Split {split} must satisfy 1 < split < {length}')
