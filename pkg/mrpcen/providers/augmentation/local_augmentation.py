import logging
import threading

from mrpcen.core import (
    AudioClip,
    AugmentationConfig,
    AugmentationProvider,
    ImpulseResponse,
    ImpulseResponseSpec,
    convolve_reverb,
    load_impulse_response,
    pitch_shift,
    pitch_suffix,
    reverb_suffix,
    synth_impulse_response,
)

logger = logging.getLogger(__name__)


class LocalAugmentationProvider(AugmentationProvider):
    """
    Reverb with recorded or synthetic impulse responses, and pitch shifts.

    Recorded IRs are read once. Synthetic IRs are drawn at the sample rate
    of the clip they are applied to, one per rate.
    """

    def __init__(self, config: AugmentationConfig):
        super().__init__(config)
        self._reverbs = {
            reverb_suffix(ir.label): ir for ir in config.impulse_responses
        }
        self._shifts = {
            pitch_suffix(shift): shift for shift in config.pitch_shifts
        }
        self._cache: dict[tuple[str, int], ImpulseResponse] = {}
        self._lock = threading.Lock()

    def impulse_response(
        self, spec: ImpulseResponseSpec, sample_rate: int
    ) -> ImpulseResponse:
        key = (spec.label, sample_rate if spec.synthetic else 0)
        with self._lock:
            if key not in self._cache:
                if spec.synthetic:
                    ir = synth_impulse_response(
                        spec.tau_c,
                        duration=spec.duration,
                        sample_rate=sample_rate,
                        seed=spec.seed,
                        label=spec.label,
                    )
                else:
                    ir = load_impulse_response(spec.path, label=spec.label)
                logger.debug(
                    f"Prepared impulse response '{spec.label}' "
                    f"({len(ir)} samples at {ir.sample_rate} Hz)"
                )
                self._cache[key] = ir
            return self._cache[key]

    def _augment(self, clip: AudioClip, variant: str) -> AudioClip:
        if variant in self._reverbs:
            ir = self.impulse_response(
                self._reverbs[variant], clip.sample_rate
            )
            return convolve_reverb(clip, ir)
        return pitch_shift(clip, self._shifts[variant])
