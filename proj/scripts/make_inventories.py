#!/usr/bin/env python3
"""Regenerates the word/action/object/name/image inventories under data/.

Only the inventory sizes matter to the models; the contents are arbitrary but
stable, so this script is deterministic.
"""
import itertools
import pathlib

DATA = pathlib.Path(__file__).resolve().parent.parent / "data"

ONSETS = ["b", "br", "c", "ch", "cl", "d", "dr", "f", "fl", "g", "gr", "h", "j",
          "k", "l", "m", "n", "p", "pl", "r", "s", "sh", "st", "t", "tr", "v", "w", "z"]
VOWELS = ["a", "e", "i", "o", "u", "ai", "ea", "oo"]
CODAS = ["", "n", "r", "m", "st", "ck", "l", "x"]

ACTIONS = """
juggling kissing tickling painting hugging chasing feeding kicking lifting throwing
catching biting licking sniffing punching climbing riding pushing pulling carrying
dropping shaking stirring frying baking slicing peeling washing drying folding
ironing sewing knitting weaving carving sculpting drawing photographing filming
recording singing whistling drumming strumming bowing saluting waving pointing
tapping patting slapping squeezing stretching bending twisting spinning rolling
bouncing dribbling shooting swinging hammering sawing drilling digging planting
watering pruning raking sweeping mopping scrubbing polishing wrapping unwrapping
opening closing locking unlocking hiding finding burying launching steering
towing dragging balancing stacking flipping tossing hurling smashing
cracking breaking gluing taping stapling pinning clipping shaving brushing combing
braiding dyeing tattooing piercing bandaging splinting inflating deflating popping
boiling freezing melting roasting grilling smoking pickling salting peppering
tasting sipping gulping chewing crunching nibbling serenading interviewing arresting
rescuing crowning knighting
hypnotizing tackling lassoing harpooning vacuuming microwaving blessing ticketing
""".split()

OBJECTS = """
pineapple bicycle violin umbrella telescope lantern saxophone toaster cactus
penguin giraffe octopus dolphin parrot tortoise hamster kangaroo lobster walrus
pumpkin watermelon cucumber broccoli banana coconut avocado mango cherry lemon
anchor compass hammock kayak canoe sailboat submarine helicopter tractor bulldozer
rocket satellite skateboard snowboard trampoline wheelbarrow ladder shovel rake
bucket teapot kettle skillet spatula whisk rolling-pin blender microwave fridge
piano trumpet harp accordion banjo tuba cello flute drumkit microphone
camera typewriter lamp mirror clock hourglass candle chandelier fireplace couch
sofa pillow blanket suitcase backpack wallet briefcase necklace crown tiara
helmet sombrero top-hat boot sandal glove scarf tuxedo kilt apron
football baseball bowling-ball frisbee kite yo-yo puppet teddy-bear robot dinosaur
volcano iceberg snowman sandcastle igloo pyramid lighthouse windmill castle bridge
sword shield bow-tie magnet battery lightbulb keyboard joystick headphones
tornado rainbow comet meteor moon cloud feather pearl diamond ruby emerald
trophy medal
""".split()

NAMES = """
Albert-Einstein Marie-Curie Isaac-Newton Ada-Lovelace Charles-Darwin Nikola-Tesla
Galileo Cleopatra Julius-Caesar Napoleon Abraham-Lincoln George-Washington
Winston-Churchill Mahatma-Gandhi Nelson-Mandela Queen-Victoria Joan-of-Arc
Leonardo-da-Vinci Michelangelo Vincent-van-Gogh Pablo-Picasso Frida-Kahlo
William-Shakespeare Jane-Austen Mark-Twain Charles-Dickens Homer Confucius
Mozart Beethoven Bach Elvis-Presley Michael-Jackson Madonna Beyonce Bob-Dylan
John-Lennon Freddie-Mercury Louis-Armstrong Frank-Sinatra Marilyn-Monroe
Charlie-Chaplin Audrey-Hepburn Bruce-Lee Jackie-Chan Tom-Hanks Oprah-Winfrey
Serena-Williams Muhammad-Ali Pele Babe-Ruth Michael-Jordan Usain-Bolt
Amelia-Earhart Neil-Armstrong Buzz-Aldrin Yuri-Gagarin Sally-Ride Marco-Polo
Christopher-Columbus Ferdinand-Magellan Captain-Cook Genghis-Khan Alexander-the-Great
Ramses Tutankhamun Aristotle Plato Socrates Pythagoras Archimedes Euclid
Sherlock-Holmes Robin-Hood King-Arthur Merlin Dracula Frankenstein Zorro
Santa-Claus Cinderella Snow-White Pinocchio Peter-Pan Tarzan Hercules Zeus
Thor Odin Athena Poseidon Medusa Achilles Ulysses Hamlet Romeo Juliet
Don-Quixote Sancho-Panza Gulliver 
""".split()

SCENES = """
beach desert jungle glacier volcano-rim canyon waterfall meadow orchard vineyard
harbor lighthouse-cliff bazaar subway-station airport-gate train-platform library
museum-hall cathedral mosque-courtyard temple-steps castle-moat palace-garden
farmyard barn stable greenhouse bakery kitchen diner laboratory observatory
planetarium aquarium zoo-enclosure circus-tent carnival ferris-wheel roller-coaster
stadium ice-rink ski-slope tennis-court golf-green bowling-alley swimming-pool
boxing-ring racetrack marina shipwreck coral-reef iceberg-edge rainforest-canopy
bamboo-grove rice-terrace tea-plantation lavender-field sunflower-field tulip-field
haunted-house graveyard catacombs mineshaft cave-mouth treehouse igloo-village
log-cabin ranch-porch rooftop-garden skyscraper-ledge elevator escalator parking-garage
gas-station car-wash laundromat barbershop tailor-shop bookshop toy-store
candy-store flower-market fish-market night-market opera-house theater-stage
cinema-lobby concert-hall jazz-club dance-floor recording-studio newsroom
courtroom classroom lecture-hall gymnasium locker-room hospital-ward pharmacy
dentist-chair
""".split()


def words(count):
    out = []
    for onset, vowel, coda, onset2, vowel2 in itertools.product(ONSETS, VOWELS, CODAS, ONSETS, VOWELS):
        out.append(onset + vowel + coda + onset2 + vowel2)
        if len(out) == count:
            return out
    raise SystemExit("syllable grid too small")


def write(name, items, expected):
    assert len(items) == expected, (name, len(items))
    assert len(set(items)) == expected, name
    (DATA / name).write_text("\n".join(items) + "\n")


def main():
    DATA.mkdir(exist_ok=True)
    write("words.txt", words(20000), 20000)
    write("actions.txt", ACTIONS, 140)
    write("objects.txt", OBJECTS, 140)
    write("names.txt", NAMES, 100)
    write("images.txt", SCENES, 100)


if __name__ == "__main__":
    main()
