from meanforce import DampedOscillator, ModelParams
from meanforce.gaussian import thermal_state

params = ModelParams(omega0=1.0, coupling=0.1, cutoff=100.0, temperature=1.0, counter_term=True)
oscillator = DampedOscillator(params)
state = thermal_state(params.physical_frequency_sq, params.temperature)
print("success")  # noqa: T201
