"""A small randomized campaign; `dowkerlab verify` runs the same thing."""

import json

from dowkerlab.campaign import CampaignConfig, run_campaign

config = CampaignConfig(trials=10, seed=3, max_x=4, max_y=4)
report = run_campaign(config)
print(json.dumps(report.to_dict(), indent=2))
print("passed" if report.passed else "FAILED")
