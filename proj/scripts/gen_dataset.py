#!/usr/bin/env python3
"""Regenerates data/6gplan.json, the bundled task-planning corpus.

The corpus mirrors the published 6GPlan layout: a single JSON object keyed
question0..question109, 11 categories of 10 questions each, one comma-separated
keyword inventory per question. The upstream file is fetched from its public
repository when available; this generator produces a deterministic stand-in
with the same schema and scale for offline use. Entries question50 and
question52 carry the reference sample content for the AI-driven category.
"""

import json
import random
from pathlib import Path

CATEGORIES = [
    "Reconfigurable Intelligent Surfaces (RIS)",
    "Integrated Sensing and Communication (ISAC)",
    "mmWave and Terahertz (THz) Communications",
    "Non-Terrestrial Networks (NTN)",
    "Cell-Free Massive MIMO",
    "Artificial Intelligence (AI)-Driven Network Optimization",
    "Semantic Communications",
    "Open Radio Access Network (O-RAN)",
    "Quantum Communication for 6G",
    "Blockchain for Secure Wireless Networks",
    "6G-Enabled Digital Twin Network",
]

GENERIC_TERMS = [
    "reinforcement learning", "federated learning", "deep learning", "transfer learning",
    "meta-learning", "online learning", "graph neural networks", "convolutional neural networks",
    "LSTM networks", "transformer models", "attention mechanisms", "generative adversarial networks (GANs)",
    "multi-objective optimization", "convex optimization", "stochastic optimization", "genetic algorithms",
    "particle swarm optimization", "Bayesian optimization", "dynamic programming", "game theory",
    "Markov decision processes (MDPs)", "Lyapunov optimization", "gradient descent", "alternating optimization",
    "edge computing", "cloud computing", "network slicing", "software-defined networking (SDN)",
    "network function virtualization (NFV)", "digital twins", "mobile edge computing",
    "resource allocation", "spectrum allocation", "power control", "interference management",
    "channel estimation", "beamforming", "MIMO precoding", "channel state information (CSI)",
    "load balancing", "admission control", "congestion control", "traffic engineering",
    "QoS metrics", "quality of experience (QoE)", "latency minimization", "energy efficiency",
    "spectral efficiency", "throughput maximization", "outage probability", "fairness scheduling",
    "anomaly detection", "predictive maintenance", "time-series forecasting", "clustering algorithms",
    "Kalman filtering", "compressed sensing", "stochastic geometry", "ray tracing",
    "system-level simulation", "hardware-in-the-loop testing", "standardization compliance",
    "security hardening", "privacy preservation", "scalability analysis", "robustness evaluation",
    "closed-loop control", "real-time analytics", "data augmentation", "feature engineering",
    "explainable AI (XAI)", "model compression", "knowledge distillation", "distributed computing",
]

CATEGORY_TERMS = {
    "Reconfigurable Intelligent Surfaces (RIS)": [
        "RIS phase-shift optimization", "passive beamforming", "reflective elements", "metasurfaces",
        "RIS placement", "cascaded channel estimation", "discrete phase shifts", "RIS-aided beamforming",
        "blockage mitigation", "coverage extension", "near-field propagation", "element grouping",
        "hybrid active-passive RIS", "RIS controller design", "electromagnetic modeling",
        "codebook-based configuration", "angle-of-arrival estimation", "line-of-sight probability",
        "multi-RIS coordination", "hardware impairments modeling", "channel reciprocity",
        "phase noise compensation", "reflection coefficient design", "RIS-assisted localization",
    ],
    "Integrated Sensing and Communication (ISAC)": [
        "joint radar-communication waveform design", "sensing-communication trade-off", "dual-functional waveforms",
        "target detection", "range-Doppler processing", "beam pattern design", "sensing accuracy",
        "Cramer-Rao bound analysis", "interference cancellation", "full-duplex operation",
        "joint beamforming for sensing", "radar cross-section modeling", "clutter suppression",
        "waveform orthogonality", "sensing-assisted beam tracking", "spectrum sharing with radar",
        "matched filtering", "target parameter estimation", "ISAC frame structure",
        "monostatic sensing", "bistatic sensing", "sensing quality of service", "echo signal processing",
        "joint constellation design",
    ],
    "mmWave and Terahertz (THz) Communications": [
        "mmWave beam management", "THz channel modeling", "molecular absorption loss", "beam alignment",
        "hybrid beamforming", "analog beamforming codebooks", "beam squint compensation",
        "ultra-massive MIMO", "path loss compensation", "directional antennas", "phased arrays",
        "blockage prediction", "beam switching", "sub-array architectures", "lens antenna arrays",
        "atmospheric attenuation modeling", "initial access design", "beam training overhead reduction",
        "intelligent beam prediction", "spatial multiplexing gains", "wideband channel estimation",
        "phase noise mitigation", "THz transceiver design", "line-of-sight MIMO",
    ],
    "Non-Terrestrial Networks (NTN)": [
        "LEO satellite constellations", "satellite handover management", "inter-satellite links",
        "Doppler shift compensation", "HAPS platforms", "UAV relay positioning", "satellite beam hopping",
        "feeder link design", "orbital dynamics modeling", "earth-moving beams", "link budget analysis",
        "satellite-terrestrial integration", "delay-tolerant networking", "constellation topology design",
        "regenerative payloads", "transparent payloads", "rain fade mitigation", "elevation angle optimization",
        "coverage footprint planning", "satellite MIMO", "timing advance estimation",
        "non-terrestrial spectrum coordination", "on-board processing", "ephemeris-based prediction",
    ],
    "Cell-Free Massive MIMO": [
        "distributed access points", "fronthaul capacity constraints", "conjugate beamforming",
        "zero-forcing precoding", "pilot contamination mitigation", "pilot assignment", "user-centric clustering",
        "access point selection", "max-min power control", "uplink combining", "channel hardening",
        "favorable propagation", "scalable cell-free architectures", "centralized processing units",
        "distributed precoding", "fronthaul compression", "spatial correlation modeling",
        "large-scale fading decoding", "power allocation optimization", "TDD reciprocity calibration",
        "coherent joint transmission", "stripe topology deployment", "user association", "handover-free mobility",
    ],
    "Artificial Intelligence (AI)-Driven Network Optimization": [
        "AI-driven network optimization", "self-organizing networks (SONs)", "intent-based networking",
        "closed-loop automation", "network digital twins", "multi-agent reinforcement learning",
        "policy gradient methods", "deep Q-networks", "actor-critic methods", "reward shaping",
        "concept drift detection", "continual learning", "AutoML pipelines", "hyperparameter optimization",
        "network telemetry", "KPI prediction", "root cause analysis", "traffic prediction",
        "capacity forecasting", "dynamic resource allocation", "adaptive learning mechanisms",
        "model retraining strategies", "edge intelligence", "inference acceleration",
    ],
    "Semantic Communications": [
        "semantic encoding", "joint source-channel coding", "knowledge base sharing", "semantic similarity metrics",
        "task-oriented communication", "semantic rate-distortion theory", "goal-oriented compression",
        "semantic noise mitigation", "shared context modeling", "semantic channel capacity",
        "deep joint semantic coding", "meaning-aware transmission", "semantic importance weighting",
        "cross-modal semantics", "semantic error correction", "intent extraction", "text semantic transmission",
        "image semantic transmission", "semantic reconstruction quality", "background knowledge alignment",
        "semantic metric learning", "transceiver co-design", "semantic-aware scheduling", "effectiveness-level design",
    ],
    "Open Radio Access Network (O-RAN)": [
        "RAN disaggregation", "near-real-time RIC", "non-real-time RIC", "xApps", "rApps",
        "E2 interface design", "A1 policy management", "open fronthaul", "7.2x functional split",
        "RAN intelligent controllers", "conflict mitigation between xApps", "multi-vendor interoperability",
        "O-RAN security architecture", "service management and orchestration", "RIC closed-loop latency",
        "traffic steering xApp", "QoS optimization rApp", "massive MIMO beamforming control",
        "energy saving rApps", "cell sleep scheduling", "interference coordination",
        "O-Cloud infrastructure", "network function placement", "testing and integration frameworks",
    ],
    "Quantum Communication for 6G": [
        "quantum key distribution (QKD)", "entanglement distribution", "quantum repeaters",
        "BB84 protocol", "measurement-device-independent QKD", "quantum teleportation",
        "quantum error correction", "decoy-state protocols", "photon source engineering",
        "single-photon detectors", "quantum memory", "trusted relay networks", "satellite QKD",
        "continuous-variable QKD", "quantum network routing", "entanglement swapping",
        "quantum random number generation", "post-quantum cryptography integration", "quantum channel modeling",
        "decoherence mitigation", "quantum internet architecture", "fiber-based QKD deployment",
        "free-space optical quantum links", "key rate optimization",
    ],
    "Blockchain for Secure Wireless Networks": [
        "distributed ledger technology", "consensus mechanisms", "proof-of-stake protocols",
        "practical Byzantine fault tolerance", "smart contracts", "spectrum trading platforms",
        "decentralized identity management", "secure roaming settlement", "lightweight consensus for IoT",
        "sharding techniques", "off-chain transactions", "sidechain architectures", "merkle tree verification",
        "tamper-proof audit trails", "tokenized incentives", "decentralized PKI", "access control policies",
        "double-spending prevention", "blockchain scalability", "energy-efficient mining alternatives",
        "cross-chain interoperability", "privacy-preserving ledgers", "zero-knowledge proofs", "hash chain integrity",
    ],
    "6G-Enabled Digital Twin Network": [
        "digital twin synchronization", "physical-virtual mapping", "real-time state estimation",
        "twin model calibration", "what-if scenario analysis", "network emulation", "telemetry ingestion pipelines",
        "model fidelity management", "twin-driven optimization", "predictive network planning",
        "virtual testing environments", "closed-loop twin feedback", "data-driven modeling",
        "hybrid physics-ML models", "twin lifecycle management", "distributed twin architectures",
        "edge-hosted twins", "twin consistency protocols", "simulation-to-reality transfer",
        "proactive fault prediction", "resource usage mirroring", "twin security isolation",
        "federated twin coordination", "semantic twin interfaces",
    ],
}

AI_QUESTIONS = [
    "How can AI-driven systems balance real-time network optimization with long-term infrastructure"
    " planning under dynamic traffic conditions?",
    "How to design AI models that dynamically optimize heterogeneous network resources (e.g., spectrum,"
    " power, compute) while ensuring fairness across users?",
    "How can reinforcement learning frameworks be structured to handle non-stationary network"
    " environments with unpredictable user behavior?",
    "How to implement federated learning for distributed network optimization without compromising"
    " latency or data privacy?",
    "How should AI-driven network management systems prioritize conflicting objectives (e.g., energy"
    " efficiency vs. ultra-low latency) in 5G/6G slicing?",
    "How to architect AI-based self-organizing networks (SONs) that minimize human intervention while"
    " avoiding catastrophic misconfigurations?",
    "How can generative AI models simulate and preemptively optimize network topologies for"
    " unanticipated traffic patterns?",
    "How to integrate digital twin frameworks with AI-driven optimization for cross-domain network"
    " lifecycle management?",
    "How can transfer learning reduce the cost of deploying AI optimization models across"
    " geographically diverse networks?",
    "How to quantify and mitigate risks of AI-driven optimization decisions destabilizing legacy"
    " network protocols?",
]

SAMPLE_QUESTION50 = {
    "question": " How can AI-driven systems balance real-time network optimization with long-term"
    " infrastructure planning under dynamic traffic conditions?",
    "Answer": "AI-driven network optimization, dynamic traffic prediction, reinforcement learning,"
    " digital twins, multi-objective optimization, LSTM networks, spatial-temporal analysis, federated"
    " learning, software-defined networking (SDN), network function virtualization (NFV), load"
    " balancing, edge computing, generative adversarial networks (GANs), capacity forecasting, 5G"
    " network deployment, time-series forecasting, online learning, explainable AI (XAI), OSS/BSS"
    " integration, QoS metrics, adversarial training, spectrum allocation, predictive maintenance,"
    " graph-based optimization, synthetic data generation, feedback loops, cost-benefit analysis,"
    " anomaly detection, regulatory compliance, real-time network optimization, long-term"
    " infrastructure planning, dynamic traffic conditions, network efficiency, dynamic resource"
    " allocation, machine learning, centralized control, predictive analytics, capacity planning,"
    " simulation and modeling, hierarchical AI systems, continuous learning, adaptive learning"
    " mechanisms, edge intelligence, network slicing, energy efficiency optimization, latency"
    " minimization, security-aware optimization.",
    "Category": "Artificial Intelligence (AI)-Driven Network Optimization",
}

SAMPLE_QUESTION52 = {
    "question": " How can reinforcement learning frameworks be structured to handle non-stationary"
    " network environments with unpredictable user behavior?",
    "Answer": "Reinforcement Learning (RL) frameworks, AI-Driven Network Optimization, non-stationary"
    " environments, dynamic networks, user behavior variability, channel conditions, network topology,"
    " bandwidth allocation, power management, time-varying demands, data rate optimization, adaptive"
    " state representation, online feature engineering, real-time channel quality indicators, network"
    " load metrics, user mobility patterns, data normalization/scaling, context-aware state"
    " augmentation, dynamic reward shaping, multi-objective optimization, adaptive exploration"
    " strategies, concept drift detection, meta-learning, transfer learning, domain adversarial"
    " training, federated learning, Markov decision processes (MDPs), multi-agent systems, distributed"
    " reinforcement learning, hybrid models, Bayesian networks, time-series analysis, anomaly"
    " detection, clustering algorithms, contextual bandits, safe exploration, edge computing, network"
    " traffic patterns, probabilistic modeling, synthetic perturbations, automated retraining,"
    " time-split validation, fallback policies, adaptive learning rates, performance benchmarks.",
    "Category": "Artificial Intelligence (AI)-Driven Network Optimization",
}

TOPICS = {
    "Reconfigurable Intelligent Surfaces (RIS)": [
        ("RIS placement in 3D urban environments", "maximize coverage", "minimizing blockage effects"),
        ("phase-shift configuration of large RIS panels", "boost cell-edge rates", "keeping control overhead low"),
        ("cascaded channel estimation for RIS links", "improve accuracy", "limiting pilot overhead"),
        ("multi-RIS coordination across adjacent cells", "suppress interference", "preserving scalability"),
        ("hybrid active-passive RIS deployment", "extend indoor coverage", "respecting power budgets"),
        ("RIS-assisted localization services", "achieve sub-meter accuracy", "coping with multipath"),
        ("RIS reflection design under hardware impairments", "sustain beamforming gains", "tolerating phase noise"),
        ("codebook-based RIS control", "cut reconfiguration latency", "retaining near-optimal gains"),
        ("RIS-aided secure transmission", "degrade eavesdropper channels", "protecting legitimate users"),
        ("energy-neutral RIS operation", "harvest ambient power", "guaranteeing availability"),
    ],
    "Integrated Sensing and Communication (ISAC)": [
        ("dual-functional waveform design", "serve users and track targets", "bounding mutual interference"),
        ("sensing-communication resource partitioning", "meet detection probability targets", "protecting throughput"),
        ("joint beamforming for monostatic ISAC", "sharpen target resolution", "limiting downlink rate loss"),
        ("sensing-assisted beam tracking for vehicles", "sustain mmWave links", "handling rapid mobility"),
        ("clutter suppression in urban ISAC", "isolate weak echoes", "avoiding false alarms"),
        ("distributed ISAC across cooperating basestations", "fuse multi-view echoes", "keeping backhaul load bounded"),
        ("ISAC frame structure design", "interleave sensing bursts", "preserving latency budgets"),
        ("privacy-aware sensing pipelines", "extract aggregate mobility insight", "avoiding user re-identification"),
        ("full-duplex ISAC transceivers", "cancel self-interference", "retaining sensing dynamic range"),
        ("ISAC calibration and validation", "certify sensing accuracy", "scaling across deployments"),
    ],
    "mmWave and Terahertz (THz) Communications": [
        ("beam alignment for THz links", "shrink initial access delay", "handling narrow beamwidths"),
        ("molecular absorption aware scheduling", "pick robust sub-bands", "sustaining multi-Gbps rates"),
        ("hybrid beamforming architectures", "approach digital performance", "bounding RF chain counts"),
        ("blockage prediction and proactive handover", "keep sessions alive", "minimizing spurious switches"),
        ("ultra-massive MIMO arrays at THz", "exploit near-field focusing", "containing hardware cost"),
        ("beam squint compensation over wide bandwidths", "stabilize array gain", "avoiding per-subcarrier hardware"),
        ("outdoor mmWave mesh backhaul", "densify small cells", "surviving weather-induced fades"),
        ("THz transceiver impairment mitigation", "tame phase noise", "maintaining constellation integrity"),
        ("indoor THz hotspot planning", "cover demand clusters", "respecting safety regulations"),
        ("joint communication and imaging at THz", "reuse sensing apertures", "isolating functional interference"),
    ],
    "Non-Terrestrial Networks (NTN)": [
        ("LEO constellation topology design", "minimize revisit gaps", "bounding inter-satellite hops"),
        ("satellite handover orchestration", "keep sessions seamless", "handling thousands of beams"),
        ("Doppler compensation for LEO access", "stabilize synchronization", "supporting low-cost terminals"),
        ("UAV relay positioning after disasters", "restore coverage fast", "respecting endurance limits"),
        ("feeder link diversity planning", "ride through rain fades", "limiting gateway count"),
        ("satellite beam hopping schedules", "follow demand hotspots", "honoring illumination constraints"),
        ("integrated terrestrial-NTN spectrum use", "share mid-band safely", "protecting incumbent services"),
        ("on-board processing versus bent-pipe trade-offs", "cut end-to-end delay", "respecting payload power"),
        ("HAPS-assisted rural broadband", "bridge coverage gaps", "keeping service affordable"),
        ("ephemeris-driven resource pre-allocation", "anticipate link geometry", "tolerating prediction error"),
    ],
    "Cell-Free Massive MIMO": [
        ("user-centric access point clustering", "raise worst-user rates", "bounding fronthaul traffic"),
        ("pilot assignment at scale", "curb pilot contamination", "reusing scarce sequences"),
        ("max-min power control", "equalize service quality", "converging in real time"),
        ("distributed versus centralized precoding", "trade performance for fronthaul", "meeting latency targets"),
        ("fronthaul compression strategies", "fit capacity limits", "preserving beamforming fidelity"),
        ("TDD reciprocity calibration", "sustain coherent transmission", "drifting hardware notwithstanding"),
        ("scalable cell-free architectures", "grow to city scale", "keeping per-user complexity flat"),
        ("handover-free mobility management", "exploit user-centric clusters", "updating serving sets smoothly"),
        ("energy-aware access point sleeping", "cut idle consumption", "guaranteeing coverage continuity"),
        ("uplink combining strategy selection", "maximize achievable rates", "respecting CPU processing budgets"),
    ],
    "Artificial Intelligence (AI)-Driven Network Optimization": [
        ("real-time optimization with long-horizon planning", "", ""),
        ("fair multi-resource allocation", "", ""),
        ("non-stationary reinforcement learning", "", ""),
        ("federated optimization rollout", "", ""),
        ("objective prioritization in slicing", "", ""),
        ("self-organizing network safeguards", "", ""),
        ("generative topology simulation", "", ""),
        ("twin-integrated lifecycle management", "", ""),
        ("transfer learning deployment", "", ""),
        ("legacy protocol risk controls", "", ""),
    ],
    "Semantic Communications": [
        ("semantic encoder-decoder co-design", "convey task-relevant meaning", "surviving channel noise"),
        ("shared knowledge base alignment", "keep endpoints consistent", "limiting synchronization chatter"),
        ("semantic importance weighting", "protect critical content", "compressing aggressively elsewhere"),
        ("task-oriented video delivery", "serve downstream analytics", "slashing bitrate"),
        ("semantic error concealment", "recover meaning from corruption", "avoiding full retransmissions"),
        ("cross-modal semantic translation", "bridge text and imagery", "preserving intent"),
        ("semantic metrics standardization", "score meaning fidelity", "correlating with task success"),
        ("semantic-aware scheduling", "prioritize meaningful flows", "retaining fairness"),
        ("goal-oriented IoT reporting", "transmit decisions not samples", "bounding distortion"),
        ("semantic security hardening", "resist meaning-level attacks", "keeping overhead small"),
    ],
    "Open Radio Access Network (O-RAN)": [
        ("xApp conflict mitigation", "reconcile competing control loops", "guaranteeing RAN stability"),
        ("near-real-time RIC control loop design", "hit sub-second reactions", "bounding E2 signaling"),
        ("traffic steering policy optimization", "balance load across cells", "respecting UE experience"),
        ("multi-vendor interoperability testing", "certify open interfaces", "containing integration cost"),
        ("energy saving rApp strategies", "sleep underused cells", "avoiding coverage holes"),
        ("open fronthaul dimensioning", "meet 7.2x split timing", "using commodity transport"),
        ("massive MIMO control via RIC", "tune beam weights continuously", "staying within vendor limits"),
        ("A1 policy lifecycle management", "propagate intents reliably", "auditing policy effects"),
        ("O-Cloud placement of RAN functions", "pool compute efficiently", "meeting real-time deadlines"),
        ("RIC analytics data pipelines", "feed learning-based apps", "respecting subscriber privacy"),
    ],
    "Quantum Communication for 6G": [
        ("metropolitan QKD backbone design", "link data centers securely", "using deployed fiber"),
        ("satellite QKD for intercontinental keys", "beat fiber attenuation limits", "handling pass windows"),
        ("quantum repeater placement", "extend entanglement reach", "tolerating memory decoherence"),
        ("measurement-device-independent QKD rollout", "close detector loopholes", "keeping key rates viable"),
        ("hybrid classical-quantum network control", "orchestrate both planes", "isolating failure domains"),
        ("decoy-state parameter optimization", "defeat photon-number-splitting", "maximizing secret key rate"),
        ("quantum network routing", "schedule entanglement swaps", "respecting fidelity thresholds"),
        ("post-quantum and QKD co-deployment", "layer defenses", "managing cost"),
        ("free-space optical quantum links in cities", "cross fiber gaps", "surviving turbulence"),
        ("quantum random number services", "seed network security", "certifying entropy quality"),
    ],
    "Blockchain for Secure Wireless Networks": [
        ("lightweight consensus for IoT swarms", "finalize transactions fast", "fitting constrained devices"),
        ("dynamic spectrum trading ledgers", "settle leases transparently", "preventing double allocation"),
        ("decentralized identity for roaming", "authenticate across operators", "avoiding central brokers"),
        ("sharded ledgers for network events", "scale write throughput", "preserving auditability"),
        ("smart-contract SLA enforcement", "automate penalties", "keeping disputes verifiable"),
        ("zero-knowledge usage proofs", "bill without revealing behavior", "bounding proof cost"),
        ("tamper-proof configuration audit trails", "trace every change", "storing compactly"),
        ("tokenized incentives for crowdsensed coverage", "reward honest reports", "deterring sybil attacks"),
        ("cross-chain interoperability for operators", "bridge heterogeneous ledgers", "containing trust assumptions"),
        ("energy-frugal consensus selection", "avoid proof-of-work waste", "retaining Byzantine resilience"),
    ],
    "6G-Enabled Digital Twin Network": [
        ("twin synchronization cadence tuning", "track fast network state", "bounding telemetry volume"),
        ("model fidelity versus cost trade-offs", "right-size twin detail", "meeting decision deadlines"),
        ("what-if analysis for upgrades", "rehearse changes virtually", "trusting transfer to reality"),
        ("edge-hosted twin partitioning", "keep latency-critical loops local", "coordinating with central twins"),
        ("twin-driven proactive fault management", "predict failures early", "suppressing false alarms"),
        ("telemetry ingestion pipeline design", "sustain millions of counters", "deduplicating redundant feeds"),
        ("hybrid physics-ML twin modeling", "blend equations with data", "staying explainable"),
        ("twin consistency under concurrent updates", "serialize state changes", "scaling to many writers"),
        ("federated twins across operators", "share insight not data", "honoring confidentiality"),
        ("twin security isolation", "contain compromised mirrors", "preserving operational safety"),
    ],
}

FRAMES = [
    "How to optimize {a} to {b} while {c}?",
    "How can {a} be designed to {b} while {c}?",
    "How to structure {a} so as to {b} while {c}?",
    "How should {a} be engineered to {b} while {c}?",
    "How to plan {a} to {b} while {c}?",
]

TERMS_PER_ANSWER = 45


def question_text(cat: str, i: int) -> str:
    if cat == "Artificial Intelligence (AI)-Driven Network Optimization":
        return AI_QUESTIONS[i]
    a, b, c = TOPICS[cat][i]
    if cat == "Reconfigurable Intelligent Surfaces (RIS)" and i == 0:
        return "How to optimize RIS placement in 3D urban environments to maximize coverage while minimizing blockage effects?"
    return FRAMES[i % len(FRAMES)].format(a=a, b=b, c=c)


def build_answer(cat: str, i: int, rng: random.Random) -> str:
    picked = []
    seen = set()

    def take(term: str) -> None:
        if term not in seen:
            seen.add(term)
            picked.append(term)

    for term in rng.sample(CATEGORY_TERMS[cat], 16):
        take(term)
    for term in rng.sample(GENERIC_TERMS, 26):
        take(term)
    a, _, _ = TOPICS[cat][i]
    head = " ".join(a.split()[:2]).rstrip(",")
    for suffix in ("requirements analysis", "performance benchmarking", "deployment roadmap",
                   "sensitivity analysis", "risk assessment", "pilot validation", "lifecycle monitoring"):
        if len(picked) >= TERMS_PER_ANSWER:
            break
        take(f"{head} {suffix}")
    assert len(picked) == TERMS_PER_ANSWER, (cat, i, len(picked))
    return ", ".join(picked) + "."


def main() -> None:
    rng = random.Random(60)
    data = {}
    for ci, cat in enumerate(CATEGORIES):
        for qi in range(10):
            key = f"question{ci * 10 + qi}"
            if key == "question50":
                data[key] = dict(SAMPLE_QUESTION50)
                continue
            if key == "question52":
                data[key] = dict(SAMPLE_QUESTION52)
                continue
            data[key] = {
                "question": question_text(cat, qi),
                "Answer": build_answer(cat, qi, rng),
                "Category": cat,
            }

    assert len(data) == 110
    assert len({v["Category"] for v in data.values()}) == 11
    raw_total = sum(len([p for p in v["Answer"].split(",") if p.strip(" .")]) for v in data.values())
    assert 4000 <= raw_total <= 6000, raw_total

    out = Path(__file__).resolve().parent.parent / "data" / "6gplan.json"
    out.parent.mkdir(parents=True, exist_ok=True)
    with out.open("w", encoding="utf-8") as f:
        json.dump(data, f, indent=1, ensure_ascii=False)
        f.write("\n")
    print(f"wrote {out} ({len(data)} questions, {raw_total} raw keywords)")


if __name__ == "__main__":
    main()
