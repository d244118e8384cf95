"""Exception types raised by rpmix operations."""


class RpmixError(Exception):
    """Base class for all rpmix errors."""


class WindowTooShort(RpmixError):
    """Time-series window has fewer than 3 samples."""


class NonFiniteSample(RpmixError):
    """Time-series window contains NaN or Inf samples."""


class NonFiniteInput(RpmixError):
    """Sign-rule input vector contains NaN or Inf components."""


class NonFiniteEntry(RpmixError):
    """Matrix handed to the image encoder contains NaN or Inf entries."""


class TrajectoryTooShort(RpmixError):
    """Phase trajectory has fewer than 2 states."""


class SpectrumTooShort(RpmixError):
    """Phase spectrum has fewer than 3 bins."""


class DimensionMismatch(RpmixError):
    """Matrices or images that must share dimensions do not."""


class ImageIoError(RpmixError):
    """PNG read/write failed; message carries the offending path."""


class MalformedLine(RpmixError):
    """A corpus file contains a line that does not parse; message carries path and line number."""


class UnknownLabel(RpmixError):
    """Activity label could not be extracted from a filename or column."""


class EmptyFile(RpmixError):
    """A corpus file contains no data rows."""


class MissingColumn(RpmixError):
    """CSV header lacks a column named in the ingestion config."""


class InvalidLength(RpmixError):
    """Requested resample length is below the 3-sample minimum."""


class EmptyManifest(RpmixError):
    """Split requested over a manifest with no records."""


class ManifestIntegrityError(RpmixError):
    """Manifest finalization found records pointing at missing image files."""


class EmptyCorpus(RpmixError):
    """No episodes were found under the input directory."""
