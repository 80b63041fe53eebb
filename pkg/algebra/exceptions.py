"""Иерархия исключений движка."""


class BlockforgeError(Exception):
    """Базовая ошибка движка"""


class InputError(BlockforgeError):
    """Некорректные входные данные: подстановка, файл группы, аргументы."""

    def __init__(self, message, line=None, column=None):
        super().__init__(message)
        self.message = message
        self.line = line
        self.column = column

    def __str__(self):
        if self.line is None:
            return self.message
        if self.column is None:
            return f'line {self.line}: {self.message}'
        return f'line {self.line}, column {self.column}: {self.message}'


class DomainError(BlockforgeError):
    """Аргумент вне области определения операции (не подгруппа, не нормальна и т. п.)"""


class PreconditionError(BlockforgeError):
    """Не выполнено предусловие операции (например, p-разрешимость)"""


class InternalError(BlockforgeError):
    """Нарушение теоремы, которое означает ошибку в вычислениях"""
