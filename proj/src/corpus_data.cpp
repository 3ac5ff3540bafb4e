#include "cogsim/corpus.hpp"

namespace cogsim {

// Default corpus, identical to data/template_corpus.json.
const char* builtin_corpus_json() {
    static const char kJson[] = R"__CORPUS__({
  "_version": "1.0.0",
  "News": [
    "The news clip covered the {topic} and included {detail}.",
    "This news segment reported on the {topic} and featured {detail}.",
    "The anchor summarized the {topic} and presented {detail}.",
    "Coverage of the {topic} continued with {detail}.",
    "The report explained the {topic} and closed with {detail}."
  ],
  "Sports": [
    "The sports clip showed the {topic} and included {detail}.",
    "This sports segment followed the {topic} and featured {detail}.",
    "The commentator recapped the {topic} and presented {detail}.",
    "Action from the {topic} continued with {detail}.",
    "The broadcast tracked the {topic} and closed with {detail}."
  ],
  "Cooking": [
    "The cooking clip demonstrated the {topic} and included {detail}.",
    "This cooking video walked through the {topic} and featured {detail}.",
    "The host prepared the {topic} and shared {detail}.",
    "The recipe segment covered the {topic} and offered {detail}.",
    "The kitchen demo built the {topic} and closed with {detail}."
  ],
  "Entertainment": [
    "The entertainment clip previewed the {topic} and included {detail}.",
    "This entertainment segment reviewed the {topic} and featured {detail}.",
    "The host toured the {topic} and shared {detail}.",
    "The show spotlighted the {topic} and presented {detail}.",
    "The episode revisited the {topic} and closed with {detail}."
  ],
  "World": [
    "The world affairs clip surveyed the {topic} and included {detail}.",
    "This world report profiled the {topic} and featured {detail}.",
    "The correspondent visited the {topic} and gathered {detail}.",
    "The dispatch examined the {topic} and presented {detail}.",
    "The feature followed the {topic} and closed with {detail}."
  ],
  "_topics": {
    "News": [
      "city council vote",
      "regional election results",
      "transit strike talks",
      "harbor cleanup plan",
      "school funding debate",
      "water main repairs",
      "downtown zoning proposal",
      "county budget hearing",
      "bridge inspection report",
      "wildfire evacuation drill",
      "airport expansion review",
      "public records audit"
    ],
    "Sports": [
      "playoff qualifying match",
      "marathon training series",
      "rowing team trials",
      "city basketball derby",
      "junior tennis open",
      "cycling hill stage",
      "relay record attempt",
      "winter skating gala",
      "club transfer window",
      "stadium renovation race",
      "coastal sailing regatta",
      "amateur boxing card"
    ],
    "Cooking": [
      "braised vegetable stew",
      "sourdough starter routine",
      "citrus glazed salmon",
      "hand rolled pasta",
      "spiced lentil soup",
      "weeknight stir fry",
      "layered berry cake",
      "smoked pepper salsa",
      "herb crusted chicken",
      "slow roasted tomatoes",
      "pickled radish salad",
      "maple oat porridge"
    ],
    "Entertainment": [
      "festival lineup reveal",
      "backstage rehearsal tour",
      "animated short premiere",
      "indie band reunion",
      "award season recap",
      "streaming series finale",
      "comedy open mic night",
      "museum light installation",
      "street dance showcase",
      "film score retrospective",
      "puppet theater revival",
      "late night talk special"
    ],
    "World": [
      "coastal flood response",
      "desert solar farm",
      "alpine rail corridor",
      "island ferry service",
      "rainforest canopy survey",
      "arctic research station",
      "river delta farming",
      "historic old town restoration",
      "cross border trade fair",
      "volcano monitoring network",
      "nomadic herding routes",
      "coral reef nursery"
    ]
  },
  "_details": {
    "News": [
      "interviews with local residents",
      "footage from the scene",
      "a short recap of prior coverage",
      "remarks from city officials",
      "charts of recent figures",
      "questions from reporters",
      "a timeline of events",
      "clips from the press briefing",
      "responses from community groups",
      "notes on next steps"
    ],
    "Sports": [
      "highlights from the final minutes",
      "scores from earlier rounds",
      "replays of the key plays",
      "comments from the coach",
      "statistics on the season",
      "reactions from the stands",
      "a rundown of the standings",
      "footage from practice",
      "profiles of new players",
      "predictions for the next round"
    ],
    "Cooking": [
      "a list of pantry staples",
      "close shots of the knife work",
      "temperature tips for the oven",
      "a quick plating demo",
      "substitutions for dairy",
      "portion advice for leftovers",
      "a printable ingredient card",
      "timing cues for each stage",
      "notes on seasoning balance",
      "storage advice for the week"
    ],
    "Entertainment": [
      "reactions from the audience",
      "a montage of past shows",
      "comments from the cast",
      "a peek at the set design",
      "snippets of the soundtrack",
      "trivia on the production",
      "a countdown of fan favorites",
      "photos from the red carpet",
      "quotes from the director",
      "teasers for the next episode"
    ],
    "World": [
      "maps of the affected region",
      "voices from nearby villages",
      "figures from the field team",
      "scenes from the local market",
      "a brief history of the area",
      "updates from aid workers",
      "data from monitoring stations",
      "views from the supply route",
      "interviews with researchers",
      "notes from the travel log"
    ]
  },
  "_extensions": {
    "News": [
      "Again the news clip focused on the {topic}.",
      "Overall the news segment stayed on the {topic}.",
      "The clip returned to the {topic} at the end."
    ],
    "Sports": [
      "Again the sports clip focused on the {topic}.",
      "Overall the broadcast stayed on the {topic}.",
      "The clip returned to the {topic} at the end."
    ],
    "Cooking": [
      "Again the cooking clip centered on the {topic}.",
      "Overall the video stayed with the {topic}.",
      "The demo returned to the {topic} at the end."
    ],
    "Entertainment": [
      "Again the entertainment clip focused on the {topic}.",
      "Overall the segment stayed on the {topic}.",
      "The show returned to the {topic} at the end."
    ],
    "World": [
      "Again the world report focused on the {topic}.",
      "Overall the dispatch stayed on the {topic}.",
      "The feature returned to the {topic} at the end."
    ]
  },
  "_titles": {
    "News": [
      "Update on the {topic}",
      "Tonight: the {topic}",
      "Briefing on the {topic}",
      "Latest on the {topic}"
    ],
    "Sports": [
      "Matchday: the {topic}",
      "Courtside at the {topic}",
      "Recap of the {topic}",
      "Inside the {topic}"
    ],
    "Cooking": [
      "How to make the {topic}",
      "Tonight we cook the {topic}",
      "Kitchen basics: the {topic}",
      "Step by step: the {topic}"
    ],
    "Entertainment": [
      "First look: the {topic}",
      "Spotlight on the {topic}",
      "Backstage at the {topic}",
      "Encore: the {topic}"
    ],
    "World": [
      "Postcard from the {topic}",
      "Field notes: the {topic}",
      "Frontline at the {topic}",
      "Journey to the {topic}"
    ]
  },
  "_fillers": ["um", "uh", "you know", "er"],
  "_vague": ["something", "stuff", "someone", "somewhere"],
  "_offtopic": [
    "My neighbor stopped by without any notice yesterday.",
    "I cannot remember where the spare keys ended up.",
    "The weather here has turned cold and gray lately.",
    "Dinner ran late and the dishes were left out.",
    "An old trip from years ago came back to me.",
    "The garden fence needs paint when the rain stops.",
    "A letter arrived but the return address was smudged.",
    "The hallway light keeps flickering on and off."
  ]
}
)__CORPUS__";
    return kJson;
}

}  // namespace cogsim
