from . import errors, model, surfaces, tools
from .analyzer import analyze
from .app import App, ThirdFormApp
from .options import RunOptions, Tolerances
from .pipeline import Pipeline
from .task import Task, TaskRuntime
from .tools.logs import initialize as initialize_logging

__all__ = [
    "errors",
    "model",
    "surfaces",
    "tools",
    "analyze",
    "App",
    "ThirdFormApp",
    "Pipeline",
    "RunOptions",
    "Task",
    "TaskRuntime",
    "Tolerances",
    "initialize_logging",
]

__name__ = "thirdform"
__version__ = "0.1.0"
