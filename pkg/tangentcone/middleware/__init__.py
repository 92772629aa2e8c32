from .error_handler import ErrorRegistry, register_error_handlers

__all__ = ["ErrorRegistry", "register_error_handlers"]
