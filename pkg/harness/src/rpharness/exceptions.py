"""Errors raised while preparing or running an experiment."""


class HarnessError(Exception):
    """Base class for harness errors."""


class ManifestMissingImages(HarnessError):
    """Manifest records point at image files that do not exist on disk."""


class InsufficientClasses(HarnessError):
    """The encoding filter selected fewer than two classes' worth of images."""


class TrainingTouchedTestImage(HarnessError):
    """The audit log caught a test-split image being opened during training."""
