import numpy as np, pathlib, json, time, sys
from microau import synth as S, features as FE, evaluate as E, model as M, train as T

label, disp_lo, disp_hi, speckles = sys.argv[1], float(sys.argv[2]), float(sys.argv[3]), sys.argv[4]
speck = [float(v) for v in speckles.split(",")]
illum = [0.02, 0.06, 0.04, 0.08, 0.03, 0.07]
sigma = [0.004, 0.010, 0.015, 0.006, 0.012, 0.008]
dbs = tuple(S.DatabaseConfig(name=f"db-{i}", samples=40,
                             noise=S.NoiseSpec(illum[i], speck[i], sigma[i]),
                             displacement_range=(disp_lo, disp_hi))
            for i in range(6))
root = pathlib.Path(f".exp/{label}")
man = S.gen_corpus(S.CorpusConfig(databases=dbs), root / "corpus", seed=20)
bank = FE.FeatureBank(man, cache_dir=root / "cache")
bank_dec = FE.FeatureBank(man, decoded=True, cache_dir=root / "cache")
tcfg = T.TrainConfig(epochs=10)
res = {}
for name, bk, fusion in [("infuse", bank, "infuse"), ("late", bank, "late"),
                         ("mag_only", bank, "single_mag"), ("decoded", bank_dec, "infuse"),
                         ("flow_only", bank, "single_flow")]:
    mcfg = M.BackboneConfig(in_mag=bk.mag_channels)
    scores = []
    for seed in (101, 202):
        t0 = time.perf_counter()
        rep = E.run_protocol(man, bk, mcfg, tcfg, seed=seed, fusion=fusion)
        scores.append(rep["protocol_macro_f1"])
        print(f"[{label}] {name} seed{seed}: {scores[-1]:.4f} ({time.perf_counter()-t0:.0f}s)", flush=True)
    res[name] = float(np.mean(scores))
print(f"[{label}] MEANS: " + " ".join(f"{k}={v:.4f}" for k, v in res.items()), flush=True)
print(f"[{label}] inf>=late {res['infuse']>=res['late']} | inf>=mag {res['infuse']>=res['mag_only']} "
      f"| lat>=dec {res['infuse']>=res['decoded']}", flush=True)
json.dump(res, open(root / "result.json", "w"))
