__all__ = [
    "MRPCENException",
    "ArgError",
    "SampleRateMismatch",
    "AudioFileNotFound",
    "AudioFormatError",
    "UnsupportedCodec",
    "FeatureFormatError",
    "ManifestError",
    "AnnotationFormatError",
]


class MRPCENException(Exception):
    """
    Base exception class for the 'mrpcen' package.
    All custom exceptions in the 'mrpcen' package should derive from this class.
    """

    ...


class ArgError(MRPCENException, ValueError):
    """
    Exception raised for invalid arguments when calling a method.
    """

    ...


class SampleRateMismatch(ArgError):
    """
    Exception raised when two signals that must share a sample rate do not.
    """

    ...


class AudioFileNotFound(MRPCENException, FileNotFoundError):
    """
    Exception raised when an audio file referenced by path does not exist.
    """

    ...


class AudioFormatError(MRPCENException):
    """
    Exception raised when an audio file is not a readable RIFF/WAVE container.
    """

    ...


class UnsupportedCodec(MRPCENException):
    """
    Exception raised when a WAV file uses a sample encoding other than
    16/24/32-bit integer PCM or 32-bit float.
    """

    ...


class FeatureFormatError(MRPCENException):
    """
    Exception raised when a feature tensor file is malformed or truncated.
    """

    ...


class ManifestError(MRPCENException):
    """
    Exception raised for invalid dataset manifests.
    """

    ...


class AnnotationFormatError(MRPCENException):
    """
    Exception raised when an annotation or prediction CSV is malformed.
    """

    ...
