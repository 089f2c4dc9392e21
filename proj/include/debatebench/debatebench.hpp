#pragma once

#include "debatebench/backend.hpp"
#include "debatebench/clock.hpp"
#include "debatebench/config.hpp"
#include "debatebench/corpus.hpp"
#include "debatebench/digest.hpp"
#include "debatebench/errors.hpp"
#include "debatebench/fingerprint.hpp"
#include "debatebench/http_backend.hpp"
#include "debatebench/jsonl.hpp"
#include "debatebench/metrics.hpp"
#include "debatebench/parallel.hpp"
#include "debatebench/pipelines.hpp"
#include "debatebench/prompts.hpp"
#include "debatebench/rate_limiter.hpp"
#include "debatebench/replay_backend.hpp"
#include "debatebench/report.hpp"
#include "debatebench/runner.hpp"
#include "debatebench/scripted_backend.hpp"
#include "debatebench/subtasks.hpp"
#include "debatebench/text.hpp"
